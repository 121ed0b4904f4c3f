#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "remh/graph.hpp"

namespace remh {

struct OracleOptions {
  // Largest deletion count to consider; unset searches to e(G).
  std::optional<int> budget;
  // Search-node ceiling; 0 uses the default (REMH_NODE_CEILING or 50M).
  std::uint64_t node_ceiling = 0;
};

struct OracleResult {
  // False means the search proved rem > budget (exceeded_budget is set);
  // all other fields except nodes are meaningful only when solved.
  bool solved = false;
  int rem = -1;
  long long ex = -1;
  std::vector<Edge> deleted_edges;  // ascending edge order
  Graph witness;                    // host minus deleted edges, pattern-free
  int exceeded_budget = -1;
  std::uint64_t nodes = 0;  // search nodes expanded
};

// Exact rem_H(G): the minimum number of edge deletions after which the
// host contains no copy of the pattern.  Bounded search tree: find one
// pattern copy, branch on deleting each of its edges, iterative deepening
// on the deletion budget, memoizing deletion sets (hosts up to 128 edges)
// with the largest remaining budget proven insufficient.
//
// Throws InfeasibleError when the pattern has no edges yet fits inside
// the host (deletions can never remove it), and ResourceLimitError when
// the node ceiling is hit.
OracleResult rem_exact(const Graph& host, const Graph& pattern,
                       const OracleOptions& options = {});

// e(G) - rem_H(G); always runs to completion (no budget).
long long ex_exact(const Graph& host, const Graph& pattern,
                   const OracleOptions& options = {});

}  // namespace remh
