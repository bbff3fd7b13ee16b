#include <benchmark/benchmark.h>

#include "mld/toric.hpp"

namespace {

void BM_MinimizePhiSurface(benchmark::State& state) {
  const long k = state.range(0);
  const auto c = mld::Cone::from_generators(2, {{0, 1}, {k, 1 - k}});
  for (auto _ : state) benchmark::DoNotOptimize(mld::minimize_phi(c, {.use_fast_paths = false}));
}
BENCHMARK(BM_MinimizePhiSurface)->DenseRange(2, 10, 4);

void BM_MinimizePhiQuotient3d(benchmark::State& state) {
  const long k = state.range(0);
  const auto c = mld::Cone::from_generators(3, {{1, 0, 0}, {0, 1, 0}, {-1, -1, k}});
  for (auto _ : state) benchmark::DoNotOptimize(mld::minimize_phi(c, {.use_fast_paths = false}));
}
BENCHMARK(BM_MinimizePhiQuotient3d)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

// x1 x2 x3 = y^2 as a toric cone; λ = 1.
void BM_MinimizePhiBinomial(benchmark::State& state) {
  const auto c = mld::Cone::from_generators(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(mld::minimize_phi(c, {.use_fast_paths = false}));
}
BENCHMARK(BM_MinimizePhiBinomial)->Unit(benchmark::kMillisecond);

void BM_PhiGreedy(benchmark::State& state) {
  const auto c = mld::Cone::from_generators(2, {{0, 1}, {25, -24}});
  const auto hb = mld::hilbert_basis(mld::dual_cone(c));
  const mld::LatticeVector a{7, 11};
  for (auto _ : state) benchmark::DoNotOptimize(mld::phi_greedy(a, hb));
}
BENCHMARK(BM_PhiGreedy);

}  // namespace
