#include <benchmark/benchmark.h>

#include "supersplit/algebra.hpp"
#include "supersplit/synthetic.hpp"

using namespace supersplit;

namespace {

AlgebraElement random_element(SeededRng& rng, Universe u, int terms) {
  AlgebraElement e(u);
  for (int t = 0; t < terms; ++t) {
    std::uint32_t tm = static_cast<std::uint32_t>(rng.next()) & ((1u << u.odd_rank) - 1);
    std::uint32_t em = static_cast<std::uint32_t>(rng.next()) & ((1u << u.form_rank) - 1);
    e += AlgebraElement::monomial(u, Monomial(tm, em), rng.small_rational(true));
  }
  return e;
}

}  // namespace

static void BM_SupercommutativeProduct(benchmark::State& state) {
  Universe u{static_cast<int>(state.range(0)), 2};
  SeededRng rng(99);
  AlgebraElement a = random_element(rng, u, 12);
  AlgebraElement b = random_element(rng, u, 12);
  for (auto _ : state) {
    AlgebraElement c = mul(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_SupercommutativeProduct)->Arg(4)->Arg(6)->Arg(8);

static void BM_ShuffleCoproduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Universe u{n, 1};
  AlgebraElement w(u);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (__builtin_popcount(mask) == 4)
      w += AlgebraElement::monomial(u, Monomial(mask, 0), Rational(1));
  for (auto _ : state) {
    TensorElement t = shuffle_delta(2, w);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_ShuffleCoproduct)->Arg(5)->Arg(6)->Arg(8);
