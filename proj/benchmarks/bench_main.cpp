// Microbenchmarks for the performance-sensitive kernels: matching,
// degree-constrained subgraphs, containment, the star-forest solver, the
// exact oracle and isomorph-free generation.

#include <benchmark/benchmark.h>

#include "remh/factor.hpp"
#include "remh/generate.hpp"
#include "remh/graph.hpp"
#include "remh/matching.hpp"
#include "remh/oracle.hpp"
#include "remh/star_forest.hpp"
#include "remh/star_forest_solver.hpp"
#include "remh/subgraph.hpp"

namespace {

using namespace remh;

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

// Deterministic quasi-random graph: edge uv present iff a mixed hash of
// (u, v, seed) clears a density threshold.
Graph scrambled_graph(int n, unsigned seed, unsigned density_pct) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      unsigned long long h =
          (static_cast<unsigned long long>(u) * 1000003u + v) * 2654435761u +
          seed;
      h ^= h >> 16;
      h *= 0x9e3779b97f4a7c15ull;
      h ^= h >> 32;
      if (h % 100 < density_pct) g.add_edge(u, v);
    }
  return g;
}

void BM_MatchingPetersen(benchmark::State& state) {
  Graph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(max_matching(g).size());
}
BENCHMARK(BM_MatchingPetersen);

void BM_MatchingDense(benchmark::State& state) {
  Graph g = scrambled_graph(static_cast<int>(state.range(0)), 7, 50);
  for (auto _ : state) benchmark::DoNotOptimize(max_matching(g).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatchingDense)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void BM_FactorComplete(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = complete_graph(n);
  DegreeBudget budget = DegreeBudget::uniform(n, n / 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(max_degree_constrained_subgraph(g, budget).m);
}
BENCHMARK(BM_FactorComplete)->Arg(8)->Arg(12)->Arg(16);

void BM_ContainmentPath(benchmark::State& state) {
  Graph host = scrambled_graph(20, 11, 25);
  Graph pattern = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(has_subgraph(host, pattern));
}
BENCHMARK(BM_ContainmentPath)->Arg(4)->Arg(6)->Arg(8);

void BM_StarForestSolver(benchmark::State& state) {
  Graph g = scrambled_graph(static_cast<int>(state.range(0)), 3, 40);
  StarForestSpec h({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(ex_star_forest(g, h).ex);
}
BENCHMARK(BM_StarForestSolver)->Arg(7)->Arg(8);

void BM_SingleStarFactorRoute(benchmark::State& state) {
  Graph g = scrambled_graph(static_cast<int>(state.range(0)), 5, 50);
  StarForestSpec h({3});
  for (auto _ : state) benchmark::DoNotOptimize(ex_star_forest(g, h).ex);
}
BENCHMARK(BM_SingleStarFactorRoute)->Arg(16)->Arg(32)->Arg(64);

void BM_OracleK5P4(benchmark::State& state) {
  Graph g = complete_graph(5);
  Graph p = path_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(rem_exact(g, p).rem);
}
BENCHMARK(BM_OracleK5P4);

void BM_Generate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    generate_graphs(n, {}, [&](const Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Generate)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
