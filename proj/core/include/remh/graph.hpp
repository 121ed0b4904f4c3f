#pragma once

#include <utility>
#include <vector>

#include "remh/bitset.hpp"

namespace remh {

// An edge is always stored with first < second.
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1: no loops, no multi-edges.
// Adjacency is kept as one bitset row per vertex, symmetric by construction.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);     // no-op when already present
  void remove_edge(int u, int v);  // no-op when absent

  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  int max_degree() const;
  std::vector<int> degrees() const;

  // Edges in lexicographic order; the edge with id i is edges()[i].
  std::vector<Edge> edges() const;

  std::vector<std::vector<int>> components() const;  // ordered by least vertex
  bool is_connected() const;
  Graph complement() const;

  // Induced subgraph on keep (must be ascending); new vertex i is keep[i].
  Graph induced(const std::vector<int>& keep) const;
  // G - v; old_of_new[i] recovers the original label of new vertex i.
  Graph without_vertex(int v, std::vector<int>* old_of_new = nullptr) const;
  // Relabeled copy: new label of old vertex v is new_of_old[v] (a permutation).
  Graph relabeled(const std::vector<int>& new_of_old) const;

  static Graph disjoint_union(const Graph& a, const Graph& b);

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<Bitset> adj_;
};

// Multiset of component sizes of the complement graph, sorted descending.
std::vector<int> complement_component_sizes(const Graph& g);

// Constructions shared by tests, tools and benchmarks.
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center 0
Graph complete_bipartite(int a, int b);
Graph disjoint_copies(const Graph& g, int k);

}  // namespace remh
