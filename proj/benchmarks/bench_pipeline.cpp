#include <benchmark/benchmark.h>

#include "supersplit/models.hpp"
#include "supersplit/synthetic.hpp"

using namespace supersplit;

static void BM_FromDerivations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    HarmonicAlgebra ha = from_derivations(2, n);
    benchmark::DoNotOptimize(ha.algebra.dim());
  }
}
BENCHMARK(BM_FromDerivations)->Arg(4)->Arg(5)->Arg(6);

static void BM_BuildContraction(benchmark::State& state) {
  FiltDGLA L = synthetic_dgla(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    Contraction C = build_contraction(total_view(L), linalg::PivotRule::FirstNonzero);
    benchmark::DoNotOptimize(C.hdim());
  }
}
BENCHMARK(BM_BuildContraction)->Arg(1)->Arg(2)->Arg(3);

static void BM_KuranishiSystem(benchmark::State& state) {
  FiltDGLA L = synthetic_dgla(static_cast<std::uint64_t>(state.range(0)));
  Contraction C = build_contraction(total_view(L), linalg::PivotRule::FirstNonzero);
  for (auto _ : state) {
    KuranishiSystem K = kuranishi_system(L, C);
    benchmark::DoNotOptimize(K.equations.size());
  }
}
BENCHMARK(BM_KuranishiSystem)->Arg(1)->Arg(2)->Arg(3);

static void BM_TowerRun(benchmark::State& state) {
  Model model = abelian_surface_rank4();
  ObstructionTower tower(model.algebra, model.tower_options());
  LieElement mu = model.make_element(
      {{"y", AlgebraElement::constant(Universe{0, 0}, Rational(1))}});
  for (auto _ : state) {
    ObstructionReport rep = tower.run(mu);
    benchmark::DoNotOptimize(rep.verdict.stage);
  }
}
BENCHMARK(BM_TowerRun);
