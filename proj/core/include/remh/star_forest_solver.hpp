#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "remh/graph.hpp"
#include "remh/star_forest.hpp"

namespace remh {

struct StarForestOptions {
  // Ceiling on (U, F') candidates examined across the whole computation;
  // 0 uses the default (REMH_NODE_CEILING or 50M).
  std::uint64_t candidate_ceiling = 0;
  // Test hook: receives the value e(F') + m of every candidate that
  // passes the bounded-degree enumeration filters.
  std::function<void(long long)> candidate_observer;
};

struct StarForestResult {
  long long ex = 0;
  long long rem = 0;
  Graph witness;  // pattern-free subgraph of the host with ex edges
  // Human-readable record of which branch ran at each recursion level.
  std::vector<std::string> branch_trace;
  std::uint64_t candidates = 0;  // bounded-degree candidates examined
};

// Degree threshold D(H) = d(d+1)v(H) + d with d = v(H) - 1, deciding
// between the bounded-degree enumeration and the high-degree recursion.
long long threshold_degree(const StarForestSpec& h);

// Exact ex(G, H) for a star-forest pattern, in polynomial time.
// Dispatch: r = 1 solves a degree-constrained subgraph with uniform cap
// t_1 - 1; otherwise a pattern-free host returns e(G) immediately;
// Delta(G) < D(H) runs the bounded-degree enumeration with C = Delta(G);
// Delta(G) >= D(H) returns max(M_1, M_2) where M_1 = ex(G, K_{1,t_1}) and
// M_2 = max_u [d(u) + ex(G - u, H')], recursing on r - 1.
//
// The graph overload strips isolated pattern vertices first; a host
// smaller than the original pattern trivially gives ex = e(G), and an
// edgeless stripped pattern that fits the host raises InfeasibleError.
StarForestResult ex_star_forest(const Graph& g, const Graph& pattern,
                                const StarForestOptions& options = {});
StarForestResult ex_star_forest(const Graph& g, const StarForestSpec& h,
                                const StarForestOptions& options = {});

// The bounded-degree enumeration on its own: valid for any C >= Delta(G);
// examines all U (|U| <= min((C+1) v(H), n)) and all F' <= G in which
// V(G) \ U is independent, filtering and completing each candidate with a
// degree-constrained subgraph on G[V \ U].
StarForestResult ex_bounded_degree(const Graph& g, const StarForestSpec& h,
                                   long long degree_bound,
                                   const StarForestOptions& options = {});

}  // namespace remh
