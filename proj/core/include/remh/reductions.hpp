#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "remh/graph.hpp"
#include "remh/trees.hpp"

namespace remh {

// Host expansion for the leaf-attachment reduction: every host vertex v
// receives a private set L_v of binom(n,2) + v(T) new leaves.  For a tree
// T of diameter >= 5 with leaf-stripped core T_0, the identity
// rem_{T_0}(source) = rem_T(constructed) holds.
struct PendantInstance {
  Graph source;
  Graph constructed;
  TreeSpec tree;
  TreeSpec stripped;                // T_0 = tree minus its leaves
  long long leaves_per_vertex = 0;  // binom(n,2) + v(T)
  // Block [first, second) of constructed vertex ids holding L_v, per v.
  std::vector<std::pair<int, int>> leaf_ranges;
};

// Requires diameter(tree) >= 5 (so the stripped core is not a star).
PendantInstance pendant_expand(const Graph& g, const TreeSpec& tree);

// Padding for disconnected forest patterns: with T_1 the non-star
// component having the most edges (ties broken by canonical form) and k
// the number of pattern components isomorphic to it, every component not
// isomorphic to T_1 is added to the host n^2 times; then
// ex(constructed, pattern) = e(constructed) - e(source) + ex(source, kT_1).
struct PadInstance {
  Graph source;
  Graph constructed;
  Graph pattern;
  Graph selected_component;  // T_1
  int multiplicity = 0;      // k = #components isomorphic to T_1
  Graph reduced_pattern;     // k T_1
  long long copies_per_component = 0;  // n^2
};

// Requires a forest pattern with at least one non-star component.
PadInstance disjoint_pad(const Graph& g, const Graph& pattern);

struct IdentityReport {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

// Oracle certification of the reduction identities (exponential time).
// Pendant: lhs = rem(source, T_0), rhs = rem(constructed, T).
IdentityReport validate_pendant(const PendantInstance& instance,
                                std::uint64_t node_ceiling = 0);
// Pad: lhs = ex(constructed, pattern),
//      rhs = e(constructed) - e(source) + ex(source, k T_1).
IdentityReport validate_pad(const PadInstance& instance,
                            std::uint64_t node_ceiling = 0);

// ex(kG, kC) = ex((k-1)G, kC) + ex(G, C) for connected C and k >= 2.
struct UnionIdentityReport {
  long long lhs = 0;         // ex(kG, kC)
  long long rhs_first = 0;   // ex((k-1)G, kC)
  long long rhs_second = 0;  // ex(G, C)
  bool holds = false;
};

// Requires connected C with at least one edge and k >= 2; computes all
// three quantities with the exact oracle.
UnionIdentityReport verify_union_identity(const Graph& g, const Graph& c,
                                          int k,
                                          std::uint64_t node_ceiling = 0);

// Can V(G) be partitioned into cliques of size q?  Requires q >= 1 and
// q | v(G).  Exact backtracking on the lowest unassigned vertex.
bool has_clique_factor(const Graph& g, int q);

// Does G contain the spanning balanced complete bipartite graph
// K_{floor(n/2), ceil(n/2)}?  Holds iff a subset of the complement's
// component sizes sums to floor(n/2) (subset-sum dynamic program).
bool contains_balanced_biclique(const Graph& g);

}  // namespace remh
