#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "remh/graph.hpp"

namespace remh {

struct GenerateOptions {
  // When set, any graph containing this pattern as a subgraph is pruned
  // the moment it appears.  Pattern-freeness is inherited by deleting a
  // vertex, so every pattern-free graph on n vertices still has a
  // pattern-free ancestor chain and the enumeration stays exhaustive.
  const Graph* forbidden = nullptr;
  // Worker threads; children of distinct parents are canonicalized in
  // parallel and merged back in parent order, so results do not depend
  // on the job count.
  int jobs = 1;
  // Ceiling on examined children across all levels; 0 uses the default.
  std::uint64_t candidate_ceiling = 0;
};

struct GenerateStats {
  std::uint64_t candidates = 0;  // children examined (pre-dedup)
  std::uint64_t emitted = 0;     // isomorphism classes on n vertices
};

// Visits one representative (in canonical labeling) per isomorphism class
// of graphs on exactly n vertices, in a deterministic order.  Levelwise
// vertex augmentation: every graph on m+1 vertices arises from some graph
// on m vertices by adding one vertex with an arbitrary neighbourhood, and
// duplicates are removed via canonical codes.
GenerateStats generate_graphs(int n, const GenerateOptions& options,
                              const std::function<void(const Graph&)>& visit);

// All isomorphism classes of trees on n vertices (canonical forms),
// grown by leaf augmentation with canonical-code dedup.
std::vector<Graph> generate_trees(int n);

}  // namespace remh
