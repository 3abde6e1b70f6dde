#include <benchmark/benchmark.h>

#include <random>

#include <ftatlas/finite_frames.hpp>

using namespace ftatlas;

namespace {

GroupVector random_vector(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  GroupVector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

void BM_FrameReportCyclic(benchmark::State& state) {
  const auto g = FiniteGroup::cyclic(static_cast<std::size_t>(state.range(0)));
  const auto phi = random_vector(g.order());
  const auto shifts = all_elements(g);
  for (auto _ : state) benchmark::DoNotOptimize(frame_report(g, phi, shifts));
}
BENCHMARK(BM_FrameReportCyclic)->Arg(16)->Arg(64)->Arg(128);

void BM_TightGeneratorSymmetric(benchmark::State& state) {
  const auto g = FiniteGroup::symmetric(static_cast<std::size_t>(state.range(0)));
  const auto phi = random_vector(g.order());
  for (auto _ : state) benchmark::DoNotOptimize(canonical_tight_generator(g, phi));
}
BENCHMARK(BM_TightGeneratorSymmetric)->Arg(3)->Arg(4);

void BM_IsotypicProjections(benchmark::State& state) {
  const auto g = FiniteGroup::symmetric(4);
  for (auto _ : state) benchmark::DoNotOptimize(isotypic_projections(g));
}
BENCHMARK(BM_IsotypicProjections);

}  // namespace
