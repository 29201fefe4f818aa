#include <benchmark/benchmark.h>

#include "swh/swh.hpp"

namespace {

void BM_ExactRational(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(swh::exact_r(2 * l, 2, 0.63));
}
BENCHMARK(BM_ExactRational)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ExactFast(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(swh::exact_r_fast(2 * l, 2, 0.63));
}
BENCHMARK(BM_ExactFast)->Arg(100)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_AsymptoticQ(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(swh::asymptotic_q(k, 0.63, 1e-10));
}
BENCHMARK(BM_AsymptoticQ)->Arg(2)->Arg(3)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_OptimalCutoff(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(swh::optimal_cutoff(n));
}
BENCHMARK(BM_OptimalCutoff)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SimulateTrials(benchmark::State& state) {
  const swh::ProblemConfig config =
      swh::ProblemConfig::make(static_cast<int>(state.range(0)), 2, 0.63);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(swh::simulate_r(config, 1 << 16, seed++));
  state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_SimulateTrials)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_EmpiricalJ(benchmark::State& state) {
  const swh::ProblemConfig config = swh::ProblemConfig::make(2000, 2, 0.63);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(swh::empirical_j(config, 1 << 16, seed++));
  state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_EmpiricalJ)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
