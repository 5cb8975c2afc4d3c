// Test-side oracles, kept independent of the library code paths they check:
// brute-force shuffle enumeration, sign-by-inversion-counting, exact Picard
// integration of the gauge flow, operator conjugation in the harmonic
// realization, and a truncated left-regular matrix realization for one small
// synthetic algebra.
#pragma once

#include <map>
#include <vector>

#include "supersplit/contraction.hpp"
#include "supersplit/derivation.hpp"
#include "supersplit/dglie.hpp"

namespace oracles {

using namespace supersplit;

/// Sign of the permutation given as an image list, by explicit inversion
/// counting.
inline int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return (inv % 2) ? -1 : 1;
}

/// Brute-force normalized (r,2)-shuffle coproduct of a single pure theta
/// monomial with ascending indices `idx`: enumerates index subsets directly
/// and computes each Koszul sign by inversion counting on the shuffled list.
inline TensorElement shuffle_oracle(Universe u, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  TensorElement out(u);
  Rational norm = Rational(1) / rational_binomial(k, 2);
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) {
      if (p >= q) continue;
      std::vector<int> left, right, shuffled;
      for (int t = 0; t < k; ++t)
        if (t != p && t != q) left.push_back(idx[static_cast<std::size_t>(t)]);
      right = {idx[static_cast<std::size_t>(p)], idx[static_cast<std::size_t>(q)]};
      shuffled = left;
      shuffled.insert(shuffled.end(), right.begin(), right.end());
      int sgn = permutation_sign(shuffled);
      std::uint32_t lmask = 0, rmask = 0;
      for (int i : left) lmask |= 1u << (i - 1);
      for (int i : right) rmask |= 1u << (i - 1);
      out.add_term(Monomial(lmask, 0), Monomial(rmask, 0), norm * Rational(sgn));
    }
  }
  return out;
}

/// Exact Picard integration of the gauge flow gamma' = [u, gamma] - du,
/// gamma(0) = mu, evaluated at time one. Independent of the closed-form
/// series used by gauge().
inline LieElement gauge_flow_oracle(const FiltDGLA& L, const LieElement& u,
                                    const LieElement& mu) {
  const char* t = "t_flow";
  auto integrate_t = [&](const AlgebraElement& poly) {
    AlgebraElement out(poly.universe());
    for (const auto& [mono, c] : poly.terms()) {
      ParamExponents p = mono.params();
      int e = 0;
      auto it = p.find(t);
      if (it != p.end()) e = it->second;
      p[t] = e + 1;
      out.add_term(Monomial(mono.theta_mask(), mono.ebar_mask(), std::move(p)),
                   c * Rational(1, e + 1));
    }
    return out;
  };
  LieElement du = L.d_apply(u);
  LieElement gamma = mu;
  for (int iter = 0; iter <= 2 * L.top_weight() + 4; ++iter) {
    LieElement rhs = L.add(L.bracket(u, gamma), L.scale(du, Rational(-1)));
    LieElement next = mu;
    for (std::size_t i = 0; i < rhs.coords.size(); ++i)
      next.coords[i] += integrate_t(rhs.coords[i]);
    if (next == gamma) break;
    gamma = std::move(next);
  }
  std::map<std::string, Rational> at_one{{t, Rational(1)}};
  for (auto& c : gamma.coords) c = c.substitute(at_one);
  return gamma;
}

/// Operator-conjugation oracle in the harmonic derivation realization: with
/// zero differential, the gauged element must act on the split algebra as
/// exp(u) o mu o exp(-u). Only the kernel-type action is visible (even frame
/// fields act by zero on the harmonic function model), so this is checked as
/// an equality of operators on all monomials.
inline bool conjugation_matches(const HarmonicAlgebra& ha, const LieElement& u,
                                const LieElement& mu, const LieElement& gauged) {
  DerivationForm ud = ha.realize(u);
  DerivationForm mud = ha.realize(mu);
  DerivationForm nud = ha.realize(gauged);
  ExpAutomorphism fwd(ud);
  ExpAutomorphism bwd(ud.scaled(Rational(-1)));
  const Universe uni = ha.uni;
  for (std::uint32_t tm = 0; tm < (1u << uni.odd_rank); ++tm) {
    for (std::uint32_t em = 0; em < (1u << uni.form_rank); ++em) {
      AlgebraElement x = AlgebraElement::monomial(uni, Monomial(tm, em), Rational(1));
      AlgebraElement lhs = nud.apply(x);
      AlgebraElement rhs = fwd(mud.apply(bwd(x)));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

/// The spec's three-dimensional synthetic algebra e0 -> e1 with
/// [e0, e1] = e2: basis (e0: degree 0, weight 1), (e1: degree 1, weight 1),
/// (e2: degree 1, weight 2), d(e0) = e1.
inline FiltDGLA three_dim_example() {
  std::vector<BasisEl> basis = {
      {"e0", 0, 1, BasisTag::Untagged},
      {"e1", 1, 1, BasisTag::Untagged},
      {"e2", 1, 2, BasisTag::Untagged},
  };
  FiltDGLA L(basis, 2);
  L.set_d(0, 1, Rational(1));
  L.set_bracket(0, 1, 2, Rational(1));
  L.set_bracket(1, 0, 2, Rational(-1));
  return L;
}

/// Left-regular matrix realization of three_dim_example() on the truncated
/// enveloping algebra with PBW basis (1, e0, e1, e2, e0^2, e0*e1), weights
/// capped at two. Returns the matrices of rho(e0), rho(e1), rho(e2) and the
/// induced differential D; rho is faithful and intertwines d and brackets.
struct RegularRealization {
  linalg::Matrix rho0{6, 6}, rho1{6, 6}, rho2{6, 6}, D{6, 6};
};

inline RegularRealization regular_realization() {
  RegularRealization r;
  // Basis order: 1, e0, e1, e2, e0^2, e0e1.
  auto set = [](linalg::Matrix& m, int row, int col, long v) { m.at(row, col) = Rational(v); };
  // rho(e0): 1->e0, e0->e0^2, e1->e0e1; e2 and products truncate.
  set(r.rho0, 1, 0, 1);
  set(r.rho0, 4, 1, 1);
  set(r.rho0, 5, 2, 1);
  // rho(e1): 1->e1, e0->e1e0 = e0e1 - e2, e1->0, rest truncates.
  set(r.rho1, 2, 0, 1);
  set(r.rho1, 5, 1, 1);
  set(r.rho1, 3, 1, -1);
  // rho(e2): 1->e2 only.
  set(r.rho2, 3, 0, 1);
  // D: derivation with D(e0)=e1, D(e0^2)=2 e0e1 - e2, D(e0e1)=0.
  set(r.D, 2, 1, 1);
  set(r.D, 5, 4, 2);
  set(r.D, 3, 4, -1);
  return r;
}

inline linalg::Matrix matrix_exp(const linalg::Matrix& a) {
  linalg::Matrix acc = linalg::Matrix::identity(a.rows());
  linalg::Matrix term = linalg::Matrix::identity(a.rows());
  for (int k = 1; k <= a.rows() + 1; ++k) {
    term = linalg::mul(term, a);
    bool zero = true;
    for (int i = 0; i < term.rows() && zero; ++i)
      for (int j = 0; j < term.cols(); ++j)
        if (!term.at(i, j).is_zero()) {
          zero = false;
          break;
        }
    if (zero) break;
    for (int i = 0; i < acc.rows(); ++i)
      for (int j = 0; j < acc.cols(); ++j) {
        Rational scaled = term.at(i, j) / rational_factorial(k);
        acc.at(i, j) += scaled;
      }
  }
  return acc;
}

}  // namespace oracles
