#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "supersplit/error.hpp"
#include "supersplit/rational.hpp"

namespace supersplit {

/// Generator universe: n anticommuting odd coordinates t1..tn and m
/// anticommuting antiholomorphic generators eb1..ebm. Commuting formal
/// parameters are global names and not part of the universe.
struct Universe {
  int odd_rank = 0;   // n
  int form_rank = 0;  // m
  friend bool operator==(const Universe&, const Universe&) = default;
};

using ParamExponents = std::map<std::string, int>;

/// Normal-form monomial: strictly increasing theta indices, strictly
/// increasing ebar indices (stored as bitmasks, indices 1-based), and a
/// commuting parameter exponent map.
class Monomial {
public:
  Monomial() = default;
  Monomial(std::uint32_t theta_mask, std::uint32_t ebar_mask, ParamExponents params = {})
      : theta_(theta_mask), ebar_(ebar_mask), params_(std::move(params)) {
    prune_params();
  }

  static Monomial unit() { return Monomial(); }

  std::uint32_t theta_mask() const { return theta_; }
  std::uint32_t ebar_mask() const { return ebar_; }
  const ParamExponents& params() const { return params_; }

  int theta_degree() const { return __builtin_popcount(theta_); }
  int ebar_degree() const { return __builtin_popcount(ebar_); }
  /// Total anticommuting parity (theta factors plus ebar factors, mod 2).
  int parity() const { return (theta_degree() + ebar_degree()) & 1; }
  int param_degree() const;

  bool has_theta(int i) const { return (theta_ >> (i - 1)) & 1u; }
  bool has_ebar(int a) const { return (ebar_ >> (a - 1)) & 1u; }
  bool is_unit() const { return theta_ == 0 && ebar_ == 0 && params_.empty(); }
  bool generator_free() const { return theta_ == 0 && ebar_ == 0; }

  std::vector<int> theta_indices() const;
  std::vector<int> ebar_indices() const;

  /// Graded-lexicographic term order:
  /// (|theta|, theta list, |ebar|, ebar list, parameter exponent vector).
  static int cmp(const Monomial& a, const Monomial& b);
  friend bool operator<(const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.theta_ == b.theta_ && a.ebar_ == b.ebar_ && a.params_ == b.params_;
  }

  std::string str() const;  // e.g. "t1t3*eb2*u^2", "1" for the unit

private:
  void prune_params();

  std::uint32_t theta_ = 0;
  std::uint32_t ebar_ = 0;
  ParamExponents params_;
};

/// Koszul sign of merging two disjoint ascending index sets (a then b into
/// one ascending list). Returns 0 if the sets intersect.
int merge_sign(std::uint32_t a, std::uint32_t b);

/// Element of the free graded-supercommutative algebra over the rationals:
/// finite signed sum of normal-form monomials. Immutable value semantics;
/// all operations produce normal forms.
class AlgebraElement {
public:
  AlgebraElement() = default;
  explicit AlgebraElement(Universe u) : uni_(u) {}

  static AlgebraElement zero(Universe u) { return AlgebraElement(u); }
  static AlgebraElement constant(Universe u, const Rational& c);
  static AlgebraElement monomial(Universe u, const Monomial& m, const Rational& c);
  static AlgebraElement theta(Universe u, int i);
  /// Product of the listed theta generators in the given order (signs from
  /// sorting into normal form; zero on repeated indices).
  static AlgebraElement theta_word(Universe u, const std::vector<int>& indices);
  static AlgebraElement ebar(Universe u, int a);
  static AlgebraElement ebar_word(Universe u, const std::vector<int>& indices);
  static AlgebraElement param(const std::string& name, int exponent = 1);

  const Universe& universe() const { return uni_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  /// True when no monomial carries theta or ebar generators (pure polynomial
  /// in the parameters; compatible with every universe).
  bool generator_free() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  AlgebraElement scaled(const Rational& c) const;
  void add_term(const Monomial& m, const Rational& c);

  bool theta_homogeneous(int* degree = nullptr) const;
  bool ebar_homogeneous(int* degree = nullptr) const;
  int max_theta_degree() const;
  int max_param_degree() const;

  AlgebraElement theta_part(int degree) const;
  AlgebraElement ebar_part(int degree) const;
  /// Splits into (theta degree, ebar degree) -> homogeneous piece.
  std::map<std::pair<int, int>, AlgebraElement> bidegree_parts() const;

  /// Left partial derivative with respect to theta_beta.
  AlgebraElement theta_derivative_left(int beta) const;

  /// Partial derivative with respect to a commuting parameter.
  AlgebraElement param_derivative(const std::string& name) const;

  /// Substitutes rational values for (some) parameters.
  AlgebraElement substitute(const std::map<std::string, Rational>& values) const;

  /// Substitutes polynomial elements for (some) parameters.
  AlgebraElement substitute(const std::map<std::string, AlgebraElement>& values) const;

  /// Homogeneous part of total parameter degree d.
  AlgebraElement param_degree_part(int d) const;

  std::vector<std::string> param_names() const;

  std::string str() const;

  /// Parses a polynomial in parameters with rational coefficients:
  /// sums of terms like "-3/2*u^2*v", "7", "u*w". No theta/ebar generators.
  static AlgebraElement parse_poly(const std::string& text);

private:
  Universe uni_;
  std::map<Monomial, Rational> terms_;
};

/// Universe of the result of a binary operation: generator-free operands
/// adopt the other side's universe; otherwise both must agree.
Universe join_universe(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return mul(a, b);
}

/// Finite sum of decomposable tensors u (x) v over one universe.
class TensorElement {
public:
  TensorElement() = default;
  explicit TensorElement(Universe u) : uni_(u) {}

  const Universe& universe() const { return uni_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<Monomial, Monomial>, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& left, const Monomial& right, const Rational& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement scaled(const Rational& c) const;
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

private:
  Universe uni_;
  std::map<std::pair<Monomial, Monomial>, Rational> terms_;
};

/// Slotwise exterior multiplication m_{r,2}: requires every tensor term to
/// have theta-degree r on the left and exactly 2 (pure theta) on the right.
AlgebraElement wedge_m(int r, const TensorElement& x);

/// Normalized (r,2)-shuffle coproduct. Input must be theta-homogeneous of
/// degree r+2; ebar factors and parameters ride on the left tensor slot.
/// Satisfies wedge_m(r, shuffle_delta(r, w)) == w.
TensorElement shuffle_delta(int r, const AlgebraElement& w);

}  // namespace supersplit
