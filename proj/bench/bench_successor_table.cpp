// Serial reference vs OpenMP kernel for materializing the theta graph.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "theta3/enumerator.hpp"

namespace {

void BM_SuccessorTableSerial(benchmark::State& state) {
  auto ctx = theta3::FieldCtx::create(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto table = theta3::build_successor_table_serial(*ctx);
    benchmark::DoNotOptimize(table.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx->size() + 1));
}

void BM_SuccessorTableParallel(benchmark::State& state) {
  auto ctx = theta3::FieldCtx::create(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto table = theta3::build_successor_table(*ctx);
    benchmark::DoNotOptimize(table.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx->size() + 1));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_Analyze(benchmark::State& state) {
  auto ctx = theta3::FieldCtx::create(static_cast<int>(state.range(0)));
  const auto table = theta3::build_successor_table(*ctx);
  for (auto _ : state) {
    auto report = theta3::analyze(*ctx, table);
    benchmark::DoNotOptimize(report.component_count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(table.size()));
}

}  // namespace

BENCHMARK(BM_SuccessorTableSerial)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuccessorTableParallel)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Analyze)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
