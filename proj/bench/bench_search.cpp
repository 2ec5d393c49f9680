#include <benchmark/benchmark.h>

#include "cwalk/constructions.hpp"
#include "cwalk/search.hpp"

using namespace cwalk;

namespace {

SubsetSumInstance infeasible() {
  SubsetSumInstance s;
  s.a = {2, 4};
  s.S = 5;
  s.k = 2;
  return s;
}

void BM_PellLayered(benchmark::State& state) {
  const std::size_t ell = static_cast<std::size_t>(state.range(0));
  const PellArtifact p = build_p_ell(ell);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_monotone_walk(p.h, p.u, {1, 0}, {ell, 10'000'000}));
}

void BM_PellSerial(benchmark::State& state) {
  const std::size_t ell = static_cast<std::size_t>(state.range(0));
  const PellArtifact p = build_p_ell(ell);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_monotone_walk_serial(p.h, p.u, {1, 0}, {ell, 10'000'000}));
}

void BM_ReductionLayered(benchmark::State& state) {
  const ReductionInstance red = build_reduction(infeasible(), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(shortest_monotone_walk(red.polygon, red.s, red.c, {red.Ck(), 10'000'000}));
}

void BM_ReductionSerial(benchmark::State& state) {
  const ReductionInstance red = build_reduction(infeasible(), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(shortest_monotone_walk_serial(red.polygon, red.s, red.c, {red.Ck(), 10'000'000}));
}

void BM_BuildReduction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_reduction(infeasible(), state.range(0)));
}

}  // namespace

BENCHMARK(BM_PellLayered)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PellSerial)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReductionLayered)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReductionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildReduction)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
