#include <benchmark/benchmark.h>

#include "cvmink/cvmink.hpp"
#include "record.hpp"
#include "sweep.hpp"
#include "threshold.hpp"

using namespace cvmink;

namespace {

void BM_LocalInvariants(benchmark::State& state) {
  const CovarianceMatrix v = random_physical_state(std::uint64_t{7});
  for (auto _ : state) benchmark::DoNotOptimize(local_invariants(v));
}
BENCHMARK(BM_LocalInvariants);

void BM_Coordinates(benchmark::State& state) {
  const LocalInvariants inv = local_invariants(random_physical_state(std::uint64_t{7}));
  for (auto _ : state) benchmark::DoNotOptimize(coordinates(inv));
}
BENCHMARK(BM_Coordinates);

void BM_Measures(benchmark::State& state) {
  const LocalInvariants inv = local_invariants(build_standard_cm(tmsv(1.0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minkowski_distance_measure(inv));
    benchmark::DoNotOptimize(log_negativity(inv));
    benchmark::DoNotOptimize(eof_lower_bound(inv));
  }
}
BENCHMARK(BM_Measures);

void BM_AnalyzeTmtss(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cli::analyze(TmtssParams{2.5, 3.0, 0.5}, 0.5));
}
BENCHMARK(BM_AnalyzeTmtss);

void BM_Figure3Sweep(benchmark::State& state) {
  const cli::SweepSpec spec = cli::sweep_spec_from_json(nlohmann::json::parse(
      R"({"fixed": {"d": 2.5, "ell": 0.5},
          "axes": [{"name": "nbar", "start": 0, "stop": 1.5, "count": 31},
                   {"name": "r", "start": 0, "stop": 3, "count": 61}]})"));
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_sweep(spec, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.size()));
}
BENCHMARK(BM_Figure3Sweep)->Unit(benchmark::kMillisecond);

void BM_Threshold(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cli::find_threshold({{"d", 2.5}, {"nbar", 0.5}, {"ell", 0.5}}, "r", 0.0, 3.0));
  }
}
BENCHMARK(BM_Threshold)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
