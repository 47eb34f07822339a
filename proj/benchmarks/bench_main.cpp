#include <benchmark/benchmark.h>

#include "coverdepth/betti.hpp"
#include "coverdepth/depth.hpp"
#include "coverdepth/layered.hpp"

namespace {

using coverdepth::FieldChoice;
using coverdepth::Graph;

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  return Graph(n, edges);
}

// Path 1-2-...-n with a pendant vertex n + i attached to each i.
Graph whiskered_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + i);
  return Graph(2 * n, edges);
}

void BM_OrderedMatchingNumber(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coverdepth::ordered_matching_number(g).size);
}
BENCHMARK(BM_OrderedMatchingNumber)->DenseRange(5, 11, 2);

void BM_HochsterPolarizedSymbolicPower(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto ideal = coverdepth::polarize(coverdepth::symbolic_power_cover(whiskered_path(4), k));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coverdepth::betti_table_squarefree(ideal, FieldChoice::rationals(), 64).pd());
  }
}
BENCHMARK(BM_HochsterPolarizedSymbolicPower)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_TaylorOracle(benchmark::State& state) {
  const auto ideal = coverdepth::cover_ideal(cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coverdepth::taylor_betti_oracle(ideal, FieldChoice::rationals(), 24).pd());
  }
}
BENCHMARK(BM_TaylorOracle)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_RegularityOfLayeredGraph(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph gk = coverdepth::build_gk(whiskered_path(4), k).as_graph();
  for (auto _ : state) benchmark::DoNotOptimize(coverdepth::reg_edge_ideal(gk, FieldChoice::rationals(), 64));
}
BENCHMARK(BM_RegularityOfLayeredGraph)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_DepthBothRoutes(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coverdepth::depth_symbolic_cover(g, 3, FieldChoice::rationals(), 64));
}
BENCHMARK(BM_DepthBothRoutes)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
