#include <benchmark/benchmark.h>

#include "cubicsudoku/pipeline.hpp"
#include "cubicsudoku/search.hpp"
#include "cubicsudoku/type_chain.hpp"
#include "cubicsudoku/verify.hpp"

using namespace cubicsudoku;

static void BM_GenerateGraph(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_graph(static_cast<int>(state.range(0)), seed++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateGraph)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

static void BM_FullPipeline(benchmark::State& state) {
  PipelineConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_pipeline(cfg));
    ++cfg.seed;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FullPipeline)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

static void BM_PipelineNoInvariantChecks(benchmark::State& state) {
  PipelineConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.check_invariants = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_pipeline(cfg));
    ++cfg.seed;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PipelineNoInvariantChecks)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_VerifyByPropagation(benchmark::State& state) {
  PipelineConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  const auto r = full_pipeline(cfg);
  const auto g = AdjacencyGraph::from_cubic(r.graph);
  for (auto _ : state) benchmark::DoNotOptimize(is_sudoku_set(g, r.colouring, r.sudoku_set, 3));
}
BENCHMARK(BM_VerifyByPropagation)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

static void BM_SearchColouring(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = AdjacencyGraph::from_cubic(generate_graph(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(search_colourings(g, PartialColouring(n), 3));
}
BENCHMARK(BM_SearchColouring)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

static void BM_Stationary(benchmark::State& state) {
  const auto m = build_q({0.2, 0.15, 0.1});
  for (auto _ : state) benchmark::DoNotOptimize(stationary(m));
}
BENCHMARK(BM_Stationary);

static void BM_MixingTime(benchmark::State& state) {
  const auto m = build_q(ChainParams::balanced(0.1));
  for (auto _ : state) benchmark::DoNotOptimize(mixing_time(m, 1e-3));
}
BENCHMARK(BM_MixingTime);

static void BM_CCondEstimate(benchmark::State& state) {
  const auto grid = default_q_grid();
  for (auto _ : state) benchmark::DoNotOptimize(estimate_c_cond(grid));
}
BENCHMARK(BM_CCondEstimate)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
