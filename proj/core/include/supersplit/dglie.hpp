#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supersplit/algebra.hpp"
#include "supersplit/derivation.hpp"

namespace supersplit {

/// Quotient/kernel classification of a basis element relative to the
/// homogeneous-derivation exact sequence. Untagged elements only take part in
/// combined (unrefined) obstruction classes.
enum class BasisTag { Quotient, Kernel, Untagged };

std::string tag_name(BasisTag t);
std::optional<BasisTag> tag_from_name(const std::string& s);

struct BasisEl {
  std::string label;
  int degree = 0;  // cohomological (Dolbeault) degree q
  int weight = 1;  // filtration step (>= 1); exterior weight is 2*weight
  BasisTag tag = BasisTag::Untagged;
};

/// Element of L (x) m: polynomial coordinates over the basis. Coordinates are
/// generator-free AlgebraElements (polynomials in global parameters).
struct LieElement {
  std::vector<AlgebraElement> coords;

  bool is_zero() const;
  friend bool operator==(const LieElement&, const LieElement&) = default;
};

struct ValidationReport {
  struct Axiom {
    std::string name;
    bool pass = true;
    std::string witness;  // first failing instance, empty when pass
  };
  std::vector<Axiom> axioms;

  bool all_pass() const;
  std::string str() const;
};

/// Finite basis-presented filtered dg Lie algebra: differential of degree +1
/// preserving the weight filtration, bracket constants additive in degree and
/// weight, F^{N+1} = 0.
class FiltDGLA {
public:
  using SparseCol = std::vector<std::pair<int, Rational>>;

  FiltDGLA() = default;
  FiltDGLA(std::vector<BasisEl> basis, int top_weight);

  int dim() const { return static_cast<int>(basis_.size()); }
  int top_weight() const { return top_weight_; }
  const std::vector<BasisEl>& basis() const { return basis_; }
  const BasisEl& el(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  std::optional<int> index_of(const std::string& label) const;

  void set_d(int from, int to, const Rational& c);
  void set_bracket(int a, int b, int c, const Rational& coeff);
  /// Fills [b,a] from [a,b] by graded antisymmetry for every stored pair
  /// whose mirror is absent.
  void antisymmetrize();

  const SparseCol& d_col(int from) const;
  const std::map<std::pair<int, int>, SparseCol>& bracket_table() const { return bracket_; }
  SparseCol bracket_entries(int a, int b) const;

  LieElement zero_element() const;
  /// Element with a single rational coordinate.
  LieElement basis_element(int i, const Rational& c = Rational(1)) const;

  LieElement d_apply(const LieElement& x) const;
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  LieElement add(const LieElement& x, const LieElement& y) const;
  LieElement scale(const LieElement& x, const Rational& c) const;
  LieElement scale(const LieElement& x, const AlgebraElement& poly) const;

  /// Degree of a nonzero homogeneous element; nullopt for 0 or mixed degrees.
  std::optional<int> degree_of(const LieElement& x) const;
  /// Smallest filtration weight with a nonzero coordinate; nullopt for 0.
  std::optional<int> min_weight_of(const LieElement& x) const;
  LieElement weight_part(const LieElement& x, int w) const;
  LieElement degree_part(const LieElement& x, int q) const;

  std::string element_str(const LieElement& x) const;

  /// Machine-checks every dg Lie axiom from the stored tables.
  ValidationReport validate() const;

  /// Structure-constant interchange format (JSON).
  std::string to_json_string() const;
  static FiltDGLA from_json_string(const std::string& text);

private:
  std::vector<BasisEl> basis_;
  std::map<std::string, int> index_;
  std::vector<SparseCol> d_;                          // d_[col] -> rows
  std::map<std::pair<int, int>, SparseCol> bracket_;  // (a,b) -> c entries
  int top_weight_ = 0;
  SparseCol empty_;
};

/// Maurer-Cartan residual d(mu) + 1/2 [mu, mu]; zero iff mu is Maurer-Cartan.
LieElement mc_residual(const FiltDGLA& L, const LieElement& mu);

/// Gauge action in nilpotent closed form:
///   e^u * mu = mu + sum_{k>=0} ad_u^k/(k+1)! ([u, mu] - d u).
LieElement gauge(const FiltDGLA& L, const LieElement& u, const LieElement& mu);

/// Harmonic split-model expansion: monomial basis of the even-weight
/// derivation controller with differential zero and structure constants from
/// the derivation bracket.
struct HarmonicAlgebra {
  Universe uni;
  FiltDGLA algebra;
  std::vector<DerivationForm> basis_forms;  // one per basis element

  /// Realizes coordinates as an actual derivation form.
  DerivationForm realize(const LieElement& x) const;
};

/// Builds the controller of the rank-n split model over the m-torus harmonic
/// reduced model. Size guard: 1 <= m <= 3, 1 <= n <= 8.
HarmonicAlgebra from_derivations(int m, int n);

/// Harmonic generator label, e.g. "t23.v1", "e1.t123.d3".
std::string harmonic_label(const Monomial& coeff, TangentDir dir);

}  // namespace supersplit
