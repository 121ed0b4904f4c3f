#include "remh/graph.hpp"

#include <algorithm>
#include <cassert>

#include "remh/errors.hpp"

namespace remh {

namespace {
int checked_vertex_count(int n) {
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  return n;
}
}  // namespace

Graph::Graph(int n) : n_(checked_vertex_count(n)), adj_(n_, Bitset(n_)) {}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loops are not allowed");
    g.add_edge(u, v);
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_);
  return u != v && adj_[u].test(v);
}

void Graph::add_edge(int u, int v) {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_ && u != v);
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_ && u != v);
  if (!adj_[u].test(v)) return;
  adj_[u].reset(v);
  adj_[v].reset(u);
  --m_;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> e;
  e.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) e.emplace_back(u, v);
    });
  return e;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  Bitset seen(n_);
  for (int s = 0; s < n_; ++s) {
    if (seen.test(s)) continue;
    std::vector<int> comp{s};
    seen.set(s);
    for (std::size_t head = 0; head < comp.size(); ++head) {
      adj_[comp[head]].for_each([&](int w) {
        if (!seen.test(w)) {
          seen.set(w);
          comp.push_back(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::is_connected() const {
  return n_ <= 1 || components().size() == 1;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adj_[u].test(v)) c.add_edge(u, v);
  return c;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  Graph g(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    assert(keep[i] >= 0 && keep[i] < n_);
    assert(i == 0 || keep[i - 1] < keep[i]);
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adj_[keep[i]].test(keep[j]))
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return g;
}

Graph Graph::without_vertex(int v, std::vector<int>* old_of_new) const {
  assert(v >= 0 && v < n_);
  std::vector<int> keep;
  keep.reserve(n_ - 1);
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  if (old_of_new) *old_of_new = keep;
  return induced(keep);
}

Graph Graph::relabeled(const std::vector<int>& new_of_old) const {
  assert(static_cast<int>(new_of_old.size()) == n_);
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) g.add_edge(new_of_old[u], new_of_old[v]);
    });
  REMH_ENSURE(g.edge_count() == m_);  // new_of_old must be a permutation
  return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n_ + b.n_);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n_ + u, a.n_ + v);
  return g;
}

std::vector<int> complement_component_sizes(const Graph& g) {
  std::vector<int> sizes;
  for (const auto& comp : g.complement().components())
    sizes.push_back(static_cast<int>(comp.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph disjoint_copies(const Graph& g, int k) {
  if (k < 0) throw PreconditionError("copy count must be non-negative");
  Graph r(0);
  for (int i = 0; i < k; ++i) r = Graph::disjoint_union(r, g);
  return r;
}

}  // namespace remh
