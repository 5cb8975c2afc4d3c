#pragma once

#include <vector>

#include "supersplit/derivation.hpp"

namespace supersplit {

/// Pure odd Hessian representative of a homogeneous weight-2j derivation:
/// even slots hold (tangent direction) (x) (theta-degree 2j-2) (x) (degree 2)
/// tensors, odd slots hold (dual frame e^gamma) (x) (2j-1) (x) (2) tensors.
struct HessianElement {
  Universe uni;
  int j = 1;
  std::vector<TensorElement> even;  // index a-1, size m
  std::vector<TensorElement> odd;   // index gamma-1, size n

  static HessianElement zero(Universe u, int j);
  bool is_zero() const;
  friend bool operator==(const HessianElement&, const HessianElement&) = default;
  std::string str() const;
};

/// Applies the normalized shuffle coproduct slotwise to the even- and
/// odd-direction coefficients of a frame-expressed homogeneous derivation.
HessianElement hess(const DerivationForm& v, int j);

/// Even projection: multiplies the last two slots on the even summand and
/// kills the odd summand. Satisfies pi_even(hess(v)) == rho(v).
QuotientElement pi_even(const HessianElement& hx);

/// Odd projection: multiplies the last two slots of the odd summand; the
/// zero map when 2j+1 exceeds the odd rank. For kernel-valued v,
/// pi_odd(hess(v)) recovers v's defining Hom element.
HomElement pi_odd(const HessianElement& hx);

/// Canonical right inverses of the projections (id (x) shuffle coproduct).
HessianElement sec_even(const QuotientElement& q, int j);
HessianElement sec_odd(const HomElement& h, int j);

}  // namespace supersplit
