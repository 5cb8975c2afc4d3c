#pragma once

#include <map>
#include <string>
#include <vector>

#include "supersplit/algebra.hpp"

namespace supersplit {

/// Frame direction of the split model: Even(a) is the invariant holomorphic
/// field v_a on the reduced space (acting by zero on the harmonic function
/// model), Odd(beta) is d/dtheta_beta.
struct TangentDir {
  enum class Kind { Even, Odd };
  Kind kind = Kind::Even;
  int index = 1;  // 1-based

  int parity() const { return kind == Kind::Odd ? 1 : 0; }
  /// Weight shift relative to the theta-degree of the coefficient.
  int weight_shift() const { return kind == Kind::Odd ? -1 : 0; }

  static TangentDir even(int a) { return {Kind::Even, a}; }
  static TangentDir odd(int beta) { return {Kind::Odd, beta}; }

  friend bool operator==(const TangentDir&, const TangentDir&) = default;
  friend bool operator<(const TangentDir& a, const TangentDir& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.index < b.index;
  }

  std::string str() const {
    return (kind == Kind::Even ? "v" : "d") + std::to_string(index);
  }
};

/// Weight-graded derivation of the split model over the harmonic reduced
/// model: finite sum of coefficient * direction terms. Coefficients may carry
/// ebar factors (Dolbeault degree) and commuting parameters.
class DerivationForm {
public:
  DerivationForm() = default;
  explicit DerivationForm(Universe u) : uni_(u) {}

  static DerivationForm zero(Universe u) { return DerivationForm(u); }
  static DerivationForm term(const AlgebraElement& coeff, TangentDir dir);

  const Universe& universe() const { return uni_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TangentDir, AlgebraElement>& terms() const { return terms_; }

  DerivationForm operator-() const;
  DerivationForm& operator+=(const DerivationForm& o);
  DerivationForm& operator-=(const DerivationForm& o);
  friend DerivationForm operator+(DerivationForm a, const DerivationForm& b) { return a += b; }
  friend DerivationForm operator-(DerivationForm a, const DerivationForm& b) { return a -= b; }
  friend bool operator==(const DerivationForm& a, const DerivationForm& b) {
    return a.terms_ == b.terms_;
  }

  DerivationForm scaled(const Rational& c) const;
  DerivationForm mul_left(const AlgebraElement& f) const;
  void add_term(TangentDir dir, const AlgebraElement& coeff);

  /// Derivation action on an algebra element (graded Leibniz rule; odd
  /// directions act as left theta-derivatives, even directions act by zero
  /// in the harmonic model).
  AlgebraElement apply(const AlgebraElement& x) const;

  /// Splits into homogeneous parts keyed by (Dolbeault degree q, exterior
  /// weight w). Weight of a term is theta-degree of the coefficient for even
  /// directions and theta-degree minus one for odd directions.
  std::map<std::pair<int, int>, DerivationForm> weight_parts() const;

  /// True when every term has one (q, w); outputs them if so.
  bool homogeneous(int* q = nullptr, int* w = nullptr) const;

  /// Green controller membership: even weight >= 2 on every term.
  bool green_controller_ok(std::string* why = nullptr) const;

  std::string str() const;

private:
  Universe uni_;
  std::map<TangentDir, AlgebraElement> terms_;  // no zero coefficients
};

/// Graded commutator [D, E] of derivation forms; weight- and degree-additive.
DerivationForm bracket(const DerivationForm& d, const DerivationForm& e);

/// Element of Q^{(2j)} = T_red (x) wedge^{2j} F: one theta-degree-2j
/// coefficient per even frame direction.
struct QuotientElement {
  Universe uni;
  std::vector<AlgebraElement> comps;  // size m, index a-1

  static QuotientElement zero(Universe u, int j);
  bool is_zero() const;
  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;
  std::string str() const;
};

/// Element of Q^{(2j+1)} = Hom(F, wedge^{2j+1} F): image of each frame vector
/// e_beta as a theta-degree-(2j+1) element.
struct HomElement {
  Universe uni;
  std::vector<AlgebraElement> comps;  // size n, index beta-1

  static HomElement zero(Universe u, int j);
  bool is_zero() const;
  friend bool operator==(const HomElement&, const HomElement&) = default;
  std::string str() const;
};

/// Projection to the quotient sheaf: even-direction part of a homogeneous
/// weight-2j derivation; odd-direction terms map to zero.
QuotientElement rho(const DerivationForm& d, int j);

/// Kernel inclusion: h |-> sum_beta h(e_beta) * d/dtheta_beta, a weight-2j
/// derivation with zero rho-image.
DerivationForm kernel_include(const HomElement& h, int j);

/// Finite exponential of a nilpotent degree-0 weight-raising derivation,
/// acting as an algebra automorphism.
class ExpAutomorphism {
public:
  explicit ExpAutomorphism(DerivationForm u);

  AlgebraElement operator()(const AlgebraElement& x) const;
  const DerivationForm& log() const { return u_; }

private:
  DerivationForm u_;
};

}  // namespace supersplit
