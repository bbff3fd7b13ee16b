#include <benchmark/benchmark.h>

#include "mld/cone.hpp"
#include "mld/hilbert.hpp"

namespace {

// cone((1,0),(1,k)): the Hilbert basis has k+1 elements.
void BM_HilbertBasis2d(benchmark::State& state) {
  const long k = state.range(0);
  const auto c = mld::Cone::from_generators(2, {{1, 0}, {1, k}});
  for (auto _ : state) benchmark::DoNotOptimize(mld::hilbert_basis(c));
}
BENCHMARK(BM_HilbertBasis2d)->RangeMultiplier(4)->Range(4, 256);

// The dual of the weighted quotient cone with rays e1, e2, (-1,-1,k).
void BM_HilbertBasis3d(benchmark::State& state) {
  const long k = state.range(0);
  const auto sigma = mld::Cone::from_generators(3, {{1, 0, 0}, {0, 1, 0}, {-1, -1, k}});
  const auto dual = mld::dual_cone(sigma);
  for (auto _ : state) benchmark::DoNotOptimize(mld::hilbert_basis(dual));
}
BENCHMARK(BM_HilbertBasis3d)->DenseRange(3, 15, 4);

void BM_DualCone(benchmark::State& state) {
  const auto c = mld::Cone::from_generators(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {2, 1, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(mld::dual_cone(c));
}
BENCHMARK(BM_DualCone);

}  // namespace
