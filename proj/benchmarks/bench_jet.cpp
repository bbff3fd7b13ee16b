#include <benchmark/benchmark.h>

#include <random>

#include "mld/jet.hpp"

namespace {

void BM_StaircaseWhitney(benchmark::State& state) {
  const auto s = mld::require_integral({{2, 0, 0}, {0, 2, 1}});
  const auto m = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mld::staircase_verify(s, mld::AlphaTuple{2, 1, 2}, m, 10007, 10));
  }
}
BENCHMARK(BM_StaircaseWhitney)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_Expand(benchmark::State& state) {
  const auto s = mld::require_integral({{3, 1, 0}, {0, 3, 0}, {0, 0, 2}});
  const auto m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(mld::expand(s, {}, mld::AlphaTuple{2, 2, 3}, m));
}
BENCHMARK(BM_Expand)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_RootsLargeField(benchmark::State& state) {
  const mld::PrimeField f(1000003);
  std::mt19937_64 rng(1);
  mld::UniPoly p(static_cast<std::size_t>(state.range(0)) + 1);
  for (auto& c : p) c = f.random(rng);
  p.back() = 1;
  for (auto _ : state) benchmark::DoNotOptimize(mld::roots(f, p, rng));
}
BENCHMARK(BM_RootsLargeField)->DenseRange(2, 8, 3);

}  // namespace
