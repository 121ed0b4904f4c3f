#pragma once

#include <vector>

#include "remh/graph.hpp"

namespace remh {

// A classified tree together with its center decomposition when the
// diameter is 3 or 4: a center vertex a, its neighbours b_1..b_p (branch
// vertices) and the leaf sets C_i = N(b_i) \ {a} with sizes gamma_i.
// Branches are sorted by nondecreasing gamma (ties by vertex index), so
// gamma is nondecreasing.  For stars (diameter <= 2) only the center is
// set; for diameter >= 5 the decomposition is empty and center is -1.
struct TreeSpec {
  Graph tree;
  int k = 0;
  int diameter = 0;
  bool is_star = false;
  int center = -1;
  std::vector<int> branch_vertices;
  std::vector<std::vector<int>> leaf_sets;
  std::vector<int> gamma;
};

// Validates that the graph is a tree and computes the classification.
// The center of a diameter-3 tree is the central vertex of larger degree
// (smaller index on ties).
TreeSpec classify_tree(const Graph& t);

// Removes every leaf of the tree and reclassifies the rest (vertices are
// relabeled in ascending order of surviving original labels).  Requires
// at least 3 vertices.
TreeSpec strip_leaves(const TreeSpec& t);

}  // namespace remh
