#pragma once

#include <cstdint>

#include "supersplit/dglie.hpp"

namespace supersplit {

/// Deterministic pseudo-random stream (splitmix64); identical on every
/// platform, unlike the std distributions.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound).
  int below(int bound);
  /// Uniform integer in [lo, hi].
  int range(int lo, int hi);
  Rational small_rational(bool nonzero = false);

private:
  std::uint64_t state_;
};

/// Seeded synthetic filtered dg Lie algebra with every axiom exact: a direct
/// sum of a bracket-bearing part (a small exact-Jacobi Lie algebra tensored
/// with closed odd generators) and a differential-bearing abelian part,
/// blended by a random block change of basis. dim <= max_dim, weights
/// <= max_weight, untagged basis.
FiltDGLA synthetic_dgla(std::uint64_t seed, int max_dim = 12, int max_weight = 3);

/// Random degree-0 element with small rational coordinates (gauge tests).
LieElement random_degree0(const FiltDGLA& L, SeededRng& rng);

/// Random degree-1 element with small rational coordinates.
LieElement random_degree1(const FiltDGLA& L, SeededRng& rng);

}  // namespace supersplit
