#pragma once

#include <optional>
#include <vector>

#include "remh/graph.hpp"

namespace remh {

// Subgraph containment (not induced): an injection of pattern vertices
// into host vertices that carries every pattern edge to a host edge.
// Returns image[pattern_vertex] = host_vertex for the first embedding
// found by the deterministic backtracking order (pattern vertices tried in
// descending-degree order, host candidates in ascending index order), or
// nullopt when the host is pattern-free.
std::optional<std::vector<int>> contains_subgraph(const Graph& host,
                                                  const Graph& pattern);

bool has_subgraph(const Graph& host, const Graph& pattern);

}  // namespace remh
