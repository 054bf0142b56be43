// Serial reference vs OpenMP sweeps over the same point sets.

#include <benchmark/benchmark.h>

#include <vector>

#include "kstruve/sweep.hpp"
#include "kstruve/verification.hpp"

namespace {

std::vector<double> linear_grid(std::size_t n, double lo, double hi) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return xs;
}

kstruve::Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? kstruve::Execution::Serial : kstruve::Execution::Parallel;
}

void BM_EvaluateGrid(benchmark::State& state) {
  const auto xs = linear_grid(static_cast<std::size_t>(state.range(0)), 0.0, 20.0);
  const kstruve::StruveParams params{0.75, 1.5, 1.0};
  for (auto _ : state) {
    auto results = kstruve::evaluate_grid(kstruve::Variant::Struve, params, xs, mode(state));
    benchmark::DoNotOptimize(results.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvaluateGrid)->ArgsProduct({{1000, 20000}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Suite(benchmark::State& state) {
  static const char* const names[] = {"recurrence", "turan"};
  kstruve::SuiteOptions options;
  options.execution = mode(state);
  for (auto _ : state) {
    auto report = kstruve::run_suite(names[state.range(0)], options);
    benchmark::DoNotOptimize(report.passed);
  }
}
BENCHMARK(BM_Suite)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
