#include <benchmark/benchmark.h>

#include "tg/alpha.hpp"
#include "tg/generators.hpp"
#include "tg/graph.hpp"
#include "tg/lp.hpp"
#include "tg/payoff.hpp"
#include "tg/well_spread.hpp"

using namespace tg;

namespace {

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

BipartiteGraph planted(int a, int b, std::uint64_t seed) {
  Lcg64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (i == j || rng.below(100) < 20) edges.emplace_back(i, j);
  return BipartiteGraph::from_local(a, b, edges);
}

}  // namespace

static void BM_AlphaExactCycle(benchmark::State& state) {
  const SimpleGame g = cycle_game(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_exact(g).alpha);
}
BENCHMARK(BM_AlphaExactCycle)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_AlphaBruteRandom(benchmark::State& state) {
  const SimpleGame g = random_monotone_game(static_cast<int>(state.range(0)), 6, 1).game;
  for (auto _ : state) benchmark::DoNotOptimize(alpha_brute(g).alpha);
}
BENCHMARK(BM_AlphaBruteRandom)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_AlphaConstraintGeneration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  VertexSet even;
  for (int v = 0; v < n; v += 2) even.push_back(v);
  const BipartiteGraph g = BipartiteGraph::from_graph(cycle(n), even);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_bipartite_cg(g).alpha);
}
BENCHMARK(BM_AlphaConstraintGeneration)->DenseRange(8, 24, 8)->Unit(benchmark::kMillisecond);

static void BM_MaxRatioSubset(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const BipartiteGraph g = planted(a, a + 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(max_ratio_subset(g).ratio);
}
BENCHMARK(BM_MaxRatioSubset)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_EnumerateMis(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_mis(g, [&](VertexMask) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateMis)->DenseRange(10, 30, 10)->Unit(benchmark::kMillisecond);

static void BM_GallaiEdmonds(benchmark::State& state) {
  Lcg64 rng(3);
  const Graph g = random_graph(static_cast<int>(state.range(0)), 15, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gallai_edmonds(g).tutte_set.size());
}
BENCHMARK(BM_GallaiEdmonds)->DenseRange(16, 64, 16)->Unit(benchmark::kMillisecond);

static void BM_TwoSevenths(benchmark::State& state) {
  const SimpleGame g = random_monotone_game(static_cast<int>(state.range(0)), 10, 5).game;
  for (auto _ : state) benchmark::DoNotOptimize(payoff_two_sevenths(g).bound);
}
BENCHMARK(BM_TwoSevenths)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_SimplexDense(benchmark::State& state) {
  // min sum x  s.t.  x_i + x_{i+1} + x_{i+2} >= 1 (cyclic)
  const int n = static_cast<int>(state.range(0));
  LinearProgram lp(n);
  for (auto& c : lp.objective) c = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row(n);
    row[i] = row[(i + 1) % n] = row[(i + 2) % n] = 1;
    lp.add(row, Relation::greater_equal, 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp_exact(lp).objective);
}
BENCHMARK(BM_SimplexDense)->DenseRange(10, 40, 10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
