#include <benchmark/benchmark.h>

#include <random>

#include "hyp/bound.hpp"
#include "hyp/nondegen.hpp"
#include "hyp/polytope.hpp"
#include "hyp/rootsys.hpp"
#include "hyp/sums.hpp"

using namespace hyp;

namespace {

RepSystem sl2(int m) {
  RepSystem s;
  s.group = GroupSpec::sl2();
  s.reps.push_back(RepDescriptor{{}, m, 0, {}});
  return s;
}

RepSystem adjoint(rootsys::Family f, IntVec hw) {
  RepSystem s;
  s.group = GroupSpec::root_system(f, static_cast<int>(hw.size()));
  s.reps.push_back(RepDescriptor{{}, 0, 0, hw});
  return s;
}

void BM_HypSumSL2(benchmark::State& state) {
  const ff::Field f(static_cast<std::uint32_t>(state.range(0)), 1);
  const auto s = sl2(2);
  const std::vector<FqMatrix> A{identity_matrix(f, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(sums::hyp_sum(s, A, f, 1));
}
BENCHMARK(BM_HypSumSL2)->Arg(7)->Arg(13)->Arg(31);

void BM_RankBoundG2(benchmark::State& state) {
  const auto s = adjoint(rootsys::Family::G, {1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(rank_bound(s));
}
BENCHMARK(BM_RankBoundG2);

void BM_RankBoundA3(benchmark::State& state) {
  const auto s = adjoint(rootsys::Family::A, {1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(rank_bound(s));
}
BENCHMARK(BM_RankBoundA3);

void BM_ConvexHull(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> c(-10, 10);
  const int dim = static_cast<int>(state.range(0));
  std::vector<RatVec> pts(64);
  for (auto& v : pts)
    for (int k = 0; k < dim; ++k) v.push_back(c(rng));
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_ConvexHull)->DenseRange(2, 4);

void BM_WitnessSearchSL2(benchmark::State& state) {
  const ff::Field f(static_cast<std::uint32_t>(state.range(0)), 1);
  const auto s = sl2(1);
  const std::vector<FqMatrix> A{identity_matrix(f, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(nondegen::nondegen_status(s, A, f, 1));
}
BENCHMARK(BM_WitnessSearchSL2)->Arg(3)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
