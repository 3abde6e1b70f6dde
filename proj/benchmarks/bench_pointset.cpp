#include <benchmark/benchmark.h>

#include <ftatlas/heisenberg.hpp>
#include <ftatlas/pointset.hpp>

using namespace ftatlas;

namespace {

void BM_SeparationScanHeisenberg(benchmark::State& state) {
  const auto gamma = inverse_set(counterexample_set(state.range(0)));
  const GridSpec grid{{0.0, -1.0, -1.0}, {static_cast<double>(state.range(0) * state.range(0)), 1.0, 30.0}, {40, 5, 20}};
  for (auto _ : state) benchmark::DoNotOptimize(separation_scan(gamma, 1.0, grid, {}, 1));
}
BENCHMARK(BM_SeparationScanHeisenberg)->Arg(10)->Arg(25);

void BM_MinPairwiseDistance(benchmark::State& state) {
  const auto gamma = counterexample_set(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_pairwise_distance(gamma, 1));
}
BENCHMARK(BM_MinPairwiseDistance)->Arg(25)->Arg(50);

void BM_GreedyPartition(benchmark::State& state) {
  const auto gamma = counterexample_set(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_partition(gamma, 0.75, 1));
}
BENCHMARK(BM_GreedyPartition)->Arg(15)->Arg(30);

}  // namespace
