#include <benchmark/benchmark.h>

#include "mld/hypersurface.hpp"

namespace {

// x^{k+1} + y^2 + z^2.
void BM_MinimizeObjectiveA(benchmark::State& state) {
  const long k = state.range(0);
  const auto s = mld::require_integral({{k + 1, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(mld::minimize_objective(s));
}
BENCHMARK(BM_MinimizeObjectiveA)->RangeMultiplier(2)->Range(1, 32);

void BM_MinimizeObjectiveE8(benchmark::State& state) {
  const auto s = mld::require_integral({{5, 0, 0}, {0, 3, 0}, {0, 0, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(mld::minimize_objective(s));
}
BENCHMARK(BM_MinimizeObjectiveE8);

void BM_HypersurfaceReportCurve(benchmark::State& state) {
  const auto s = mld::require_integral({{2, 0}, {0, 2}, {1, 1}, {0, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(mld::hypersurface_report(s));
}
BENCHMARK(BM_HypersurfaceReportCurve);

void BM_BinomialClosedForm(benchmark::State& state) {
  const auto s = mld::require_integral({{3, 5, 0, 0}, {0, 0, 7, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(mld::binomial_lambda(s));
}
BENCHMARK(BM_BinomialClosedForm);

}  // namespace
