#include <benchmark/benchmark.h>

#include <ftatlas/classifier.hpp>
#include <ftatlas/lie_algebra.hpp>
#include <ftatlas/matrix_groups.hpp>

using namespace ftatlas;

namespace {

void BM_RootsGrelaud(benchmark::State& state) {
  const auto g = builtin_algebra("grelaud", {2, 2, 1, 3}).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(complexified_roots(g));
}
BENCHMARK(BM_RootsGrelaud);

void BM_SeriesUpperTriangular(benchmark::State& state) {
  const auto g = builtin_algebra("T_n", {1, 2, 1, static_cast<int>(state.range(0))}).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(lower_central_series(g));
}
BENCHMARK(BM_SeriesUpperTriangular)->Arg(4)->Arg(6)->Arg(8);

void BM_ClassifySoPq(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_matrix_example("so_pq", {1, p, 2, 3}));
}
BENCHMARK(BM_ClassifySoPq)->Arg(2)->Arg(5)->Arg(8);

}  // namespace
