#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "remh/graph.hpp"

namespace remh {

// Canonical code: vertex count followed by the packed upper-triangle
// adjacency bits of the canonically relabeled graph.  Codes of two graphs
// are equal iff the graphs are isomorphic.  Computed by equitable-partition
// refinement with individualization, maximizing the packed bit string.
using CanonicalCode = std::vector<std::uint64_t>;

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : c) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

CanonicalCode canonical_code(const Graph& g);
std::vector<int> canonical_labeling(const Graph& g);  // new_of_old
Graph canonical_form(const Graph& g);
// Single canonicalization run returning both pieces (generation hot path).
std::pair<CanonicalCode, Graph> canonical_code_and_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace remh
