#pragma once

#include <vector>

#include "remh/graph.hpp"

namespace remh {

struct Matching {
  std::vector<int> mate;    // mate[v], or -1 when v is exposed
  std::vector<Edge> edges;  // matched edges, lexicographically sorted
  int size() const { return static_cast<int>(edges.size()); }
};

// Maximum cardinality matching in a general graph via blossom
// contraction, O(V^3).  Deterministic: augmentation roots are tried in
// ascending vertex order and adjacency is scanned in ascending order, so
// the returned matching is reproducible.
Matching max_matching(const Graph& g);

}  // namespace remh
