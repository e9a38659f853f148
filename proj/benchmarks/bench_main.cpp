#include <benchmark/benchmark.h>

#include "packdens/greedy.hpp"
#include "packdens/oracle.hpp"
#include "packdens/survey.hpp"

namespace {

// Sets {0, 1, m-1, m}: the largest automata among 4-sets of diameter m.
packdens::IntSet wide_four_set(std::int64_t m) { return packdens::IntSet{0, 1, m - 1, m}; }

void BM_DetectPeriod(benchmark::State& state) {
  const auto s = wide_four_set(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(packdens::detect_period(s));
  }
}
BENCHMARK(BM_DetectPeriod)->DenseRange(8, 20, 4);

void BM_BuildAutomaton(benchmark::State& state) {
  const auto s = wide_four_set(state.range(0));
  for (auto _ : state) {
    auto g = packdens::build_automaton(s);
    benchmark::DoNotOptimize(g.windows.data());
  }
}
BENCHMARK(BM_BuildAutomaton)->DenseRange(8, 20, 4);

void BM_ExactDensity(benchmark::State& state) {
  const auto s = wide_four_set(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(packdens::exact_packing_density(s));
  }
  state.counters["states"] = static_cast<double>(packdens::build_automaton(s).size());
}
BENCHMARK(BM_ExactDensity)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_BruteForcePeriodic(benchmark::State& state) {
  const packdens::IntSet s{0, 1, 4, 6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(packdens::brute_force_periodic(s, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BruteForcePeriodic)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_Survey(benchmark::State& state) {
  packdens::SurveyOptions options;
  options.k = 4;
  options.max_elem = state.range(0);
  options.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(packdens::run_survey(options));
  }
}
BENCHMARK(BM_Survey)->Args({12, 1})->Args({12, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
