// Serial reference vs OpenMP kernels. Argument 0 is serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "indec/codifferent.hpp"
#include "indec/norms.hpp"
#include "indec/oracle.hpp"

using namespace indec;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_IndecomposablesBySearch(benchmark::State& s) {
  const Field f = make_field(Family::SimplestCubic, s.range(1));
  for (auto _ : s) benchmark::DoNotOptimize(indecomposables_by_search(f, mode(s)));
}
BENCHMARK(BM_IndecomposablesBySearch)->ArgsProduct({{0, 1}, {4, 8}})->Unit(benchmark::kMillisecond);

void BM_ElementsOfTrace(benchmark::State& s) {
  const Field f = make_field(Family::SimplestCubic, 7);
  const auto delta = triangle_delta(f);
  for (auto _ : s) benchmark::DoNotOptimize(elements_of_trace(delta, s.range(1), mode(s)));
}
BENCHMARK(BM_ElementsOfTrace)->ArgsProduct({{0, 1}, {6, 10}})->Unit(benchmark::kMillisecond);

void BM_CountExact(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(count_exact(20, 400, false, mode(s)));
}
BENCHMARK(BM_CountExact)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SqTable(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(sq_table(-1, 30, mode(s)));
}
BENCHMARK(BM_SqTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
