#include <benchmark/benchmark.h>

#include "snasym/scan.hpp"

using namespace snasym;

namespace {

ScanConfig bench_config(ApproxKind kind, int samples) {
  ScanConfig c;
  c.eps = 0.01;
  c.kind = kind;
  c.t_min = -2.3;
  c.t_max = 6.9;
  c.samples = samples;
  return c;
}

void BM_ScanSerial(benchmark::State& state) {
  const auto c = bench_config(static_cast<ApproxKind>(state.range(1)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_rows_serial(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanOpenMP(benchmark::State& state) {
  const auto c = bench_config(static_cast<ApproxKind>(state.range(1)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_rows(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void Args(benchmark::internal::Benchmark* b) {
  for (int kind : {static_cast<int>(ApproxKind::composite_first_half), static_cast<int>(ApproxKind::full_period)})
    for (int n : {1000, 100000}) b->Args({n, kind});
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Apply(Args)->UseRealTime();
BENCHMARK(BM_ScanOpenMP)->Apply(Args)->UseRealTime();

BENCHMARK_MAIN();
