#pragma once

#include <utility>
#include <vector>

#include "remh/graph.hpp"

namespace remh {

// Per-vertex degree caps for the maximum degree-constrained subgraph
// problem: find F <= G maximizing e(F) subject to d_F(v) <= caps[v].
struct DegreeBudget {
  std::vector<int> caps;

  static DegreeBudget uniform(int n, int cap);
  void validate(const Graph& g) const;         // size and non-negativity
  DegreeBudget clamped(const Graph& g) const;  // caps[v] := min(caps[v], d(v))
};

// Correspondence between the matching gadget and the source graph.  Edge e
// = xy (x < y, ids in Graph::edges() order) gets a pair vertex for each
// endpoint, joined by an edge; every source vertex x gets d(x) - f(x)
// slack vertices joined to the x-side pair vertex of every edge at x.
struct GadgetMap {
  std::vector<std::pair<int, int>> pair_vertices;  // per edge id: (x side, y side)
  std::vector<std::vector<int>> slack_vertices;    // per source vertex
  long long slack_total = 0;
};

// Requires a clamped budget (caps[v] <= d(v)).  The gadget satisfies
// nu(G') = m + slack_total, where m is the optimum subgraph size.
std::pair<Graph, GadgetMap> build_gadget(const Graph& g,
                                         const DegreeBudget& budget);

struct FactorResult {
  long long m = 0;                // maximum subgraph edge count
  std::vector<Edge> edges;        // the optimal subgraph F
  Graph subgraph;                 // F as a graph on V(G)
  long long matching_size = 0;    // nu(G'), the certificate
  long long slack_total = 0;
};

// Clamps the budget, solves the gadget matching, repairs uncovered slack
// vertices (ascending vertex, then ascending slack and edge id) and reads
// off F.  The identity nu(G') = m + slack_total is checked before return.
FactorResult max_degree_constrained_subgraph(const Graph& g,
                                             const DegreeBudget& budget);

}  // namespace remh
