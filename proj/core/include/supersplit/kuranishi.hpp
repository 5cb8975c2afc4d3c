#pragma once

#include <map>
#include <string>
#include <vector>

#include "supersplit/contraction.hpp"

namespace supersplit {

/// Unique gauge-fixed solution of tau = i(alpha) - 1/2 h[tau, tau], solved
/// weight by weight. Satisfies p(tau) = alpha and h(tau) = 0.
LieElement kuranishi_lift(const FiltDGLA& L, const Contraction& C, const HVec& alpha);

/// Kuranishi map kappa(alpha) = p(d tau + 1/2 [tau, tau]) as cohomology
/// coordinates (exact polynomials in the alpha parameters).
HVec kuranishi_map(const FiltDGLA& L, const Contraction& C, const HVec& alpha);

/// Curvature d tau + 1/2 [tau, tau] of the Kuranishi lift.
LieElement kuranishi_curvature(const FiltDGLA& L, const Contraction& C, const HVec& alpha);

struct KuranishiVariable {
  std::string name;    // parameter name
  std::string label;   // H^1 basis label it coordinatizes
  int weight = 1;
  int hindex = -1;
};

struct KuranishiEquation {
  std::string target_label;  // H^2 basis label
  int target_weight = 1;
  int hindex = -1;
  AlgebraElement poly;       // polynomial in the variable parameters
};

/// Symbolic Kuranishi system over a chosen degree-1 slice: one polynomial per
/// H^2 basis element, triangular by weight.
struct KuranishiSystem {
  std::vector<KuranishiVariable> variables;
  std::vector<KuranishiEquation> equations;  // every H^2 target, zeros kept

  bool identically_zero() const;
  /// JSON per the transfer interchange format; equations with zero
  /// polynomials are omitted from the output.
  std::string to_json_string() const;
  std::string str() const;
};

/// Builds the system over the given degree-1 cohomology slice; a fresh
/// parameter per slice element (names given, or "a1","a2",... by position).
KuranishiSystem kuranishi_system(const FiltDGLA& L, const Contraction& C,
                                 const std::vector<int>& slice_hindices,
                                 const std::vector<std::string>& param_names = {});

/// Full degree-1 slice.
KuranishiSystem kuranishi_system(const FiltDGLA& L, const Contraction& C);

struct WeightComponent {
  int weight = 0;                            // target weight j
  std::vector<KuranishiEquation> equations;  // targets of that weight
};

/// Splits kappa by target weight and asserts the triangularity invariants:
/// every monomial of kappa_j has total variable weight j, individual variable
/// weights < j, and parameter degree >= 2.
std::vector<WeightComponent> weight_components(const KuranishiSystem& K);

/// Polarized multilinear bracket of arity r extracted from kappa: values on
/// sorted index tuples of slice variables, as H^2 coordinate vectors.
struct BracketTable {
  int arity = 2;
  std::vector<std::string> variable_names;
  std::vector<std::string> target_labels;
  std::map<std::vector<int>, std::vector<Rational>> values;  // tuple -> coords

  bool is_zero() const;
};

BracketTable polarize(const KuranishiSystem& K, int r);

}  // namespace supersplit
