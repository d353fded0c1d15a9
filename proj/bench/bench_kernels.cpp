// Serial reference kernels against their OpenMP counterparts.
//
//   build/bench/netdim_bench --benchmark_filter=Spread
//
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "netdim/baselines.hpp"
#include "netdim/dimension.hpp"
#include "netdim/epidemic.hpp"
#include "netdim/graph.hpp"

namespace {

using namespace netdim;

// Connected sparse graph: a random recursive tree plus uniform extra edges.
Graph synthetic_graph(std::size_t n, std::size_t extra_edges) {
  std::mt19937_64 rng(12345);
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) {
    std::uniform_int_distribution<NodeId> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::uniform_int_distribution<NodeId> any(0, static_cast<NodeId>(n - 1));
  for (std::size_t i = 0; i < extra_edges; ++i) edges.emplace_back(any(rng), any(rng));
  return Graph::from_edges(n, edges);
}

const Graph& graph_for(std::int64_t n) {
  static const Graph small = synthetic_graph(300, 1200);
  static const Graph large = synthetic_graph(1200, 8000);
  return n <= 300 ? small : large;
}

SirParams bench_sir() {
  SirParams p;
  p.beta = 0.05;
  p.steps = 25;
  p.runs = 20;
  return p;
}

void BM_SpreadSerial(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::spread_all(g, bench_sir()));
}

void BM_SpreadParallel(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spread_all(g, bench_sir()));
}

void BM_BetweennessSerial(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::betweenness(g));
}

void BM_BetweennessParallel(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(betweenness(g));
}

void BM_GravitySerial(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::gravity(g));
}

void BM_GravityParallel(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gravity(g));
}

void BM_LvidSerial(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::dimension_scores(g, DimensionMethod::lvid));
  }
}

void BM_LvidParallel(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dimension_scores(g, DimensionMethod::lvid));
}

}  // namespace

BENCHMARK(BM_SpreadSerial)->Arg(300)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpreadParallel)->Arg(300)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetweennessSerial)->Arg(300)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetweennessParallel)->Arg(300)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GravitySerial)->Arg(300)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GravityParallel)->Arg(300)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LvidSerial)->Arg(300)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LvidParallel)->Arg(300)->Arg(1200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
