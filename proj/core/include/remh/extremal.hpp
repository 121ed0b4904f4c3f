#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "remh/graph.hpp"
#include "remh/trees.hpp"

namespace remh {

using Rational = boost::rational<long long>;

// (k-2) n / 2: the conjectured edge ceiling for graphs on n vertices
// avoiding a fixed k-vertex tree.
Rational es_bound(const TreeSpec& tree, long long n);

struct HeavyVertexResult {
  int vertex = -1;
  Rational value;
};

// A vertex u maximizing sum_{v in N(u)} (1 - t dbar / d(v)) with dbar =
// 2e(G)/n; the maximum is always at least (1 - t) dbar.  Requires
// 0 <= t <= 1, at least one edge, and no isolated vertices (the summand
// divides by d(v)).  Smallest-index maximizer; exact arithmetic.
HeavyVertexResult heavy_vertex(const Graph& g, const Rational& t);

// Partitions {1, ..., p} into classes J_1..J_l with
// s_i >= sum_{j in J_i} (1 + gamma_j), by repeatedly peeling the minimal
// feasible suffix as the last class and recursing on the prefix.  gamma
// must be ascending and nonnegative with every s_i >= gamma_p + 1; the
// construction is guaranteed to succeed when additionally
// sum_i s_i >= sum_j (1 + gamma_j) + (l - 1) gamma_{p-1} (gamma_{p-1}
// read as 0 when p = 1), and throws when the produced classes are
// infeasible.  Returned indices are 1-based.
std::vector<std::vector<int>> partition_indices(const std::vector<int>& gamma,
                                                const std::vector<int>& s);

// Is g a disjoint union of K_q's?
bool is_clique_union(const Graph& g, int q);

struct SescOptions {
  int jobs = 1;
  std::uint64_t candidate_ceiling = 0;  // generation guard; 0 = default
};

struct SescVerdict {
  int k = 0;      // pattern tree order
  int n = 0;      // host order
  bool holds = false;
  // Canonical graph6 of every tree-free host with 2 e(G) >= (k-2) n ...
  std::vector<std::string> extremal;
  // ... and the subset of those that are not disjoint K_{k-1} unions.
  std::vector<std::string> counterexamples;
  std::uint64_t tree_free_count = 0;  // tree-free isomorphism classes
  std::uint64_t candidates = 0;       // generation children examined
};

// Exhaustively decides whether every tree-free graph on n vertices with
// 2 e(G) >= (k-2) n is a disjoint union of K_{k-1}'s, via isomorph-free
// generation pruned to tree-free graphs.
SescVerdict verify_sesc(const TreeSpec& tree, int n,
                        const SescOptions& options = {});

}  // namespace remh
