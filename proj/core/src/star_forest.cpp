#include "remh/star_forest.hpp"

#include <algorithm>
#include <numeric>

#include "remh/errors.hpp"

namespace remh {

StarForestSpec::StarForestSpec(std::vector<int> leaf_counts)
    : t_(std::move(leaf_counts)) {
  for (int t : t_)
    if (t < 1)
      throw PreconditionError("star leaf counts must be at least 1");
  std::sort(t_.begin(), t_.end(), std::greater<int>());
}

int StarForestSpec::vertex_count() const {
  return r() + static_cast<int>(
                   std::accumulate(t_.begin(), t_.end(), 0LL));
}

long long StarForestSpec::edge_count() const {
  return std::accumulate(t_.begin(), t_.end(), 0LL);
}

Graph StarForestSpec::pattern() const { return prefix_pattern(r()); }

Graph StarForestSpec::prefix_pattern(int i) const {
  REMH_ENSURE(0 <= i && i <= r());
  int n = 0;
  for (int j = 0; j < i; ++j) n += t_[j] + 1;
  Graph g(n);
  int base = 0;
  for (int j = 0; j < i; ++j) {
    for (int leaf = 1; leaf <= t_[j]; ++leaf)
      g.add_edge(base, base + leaf);
    base += t_[j] + 1;
  }
  return g;
}

StarForestSpec StarForestSpec::prefix(int i) const {
  REMH_ENSURE(0 <= i && i <= r());
  return StarForestSpec(std::vector<int>(t_.begin(), t_.begin() + i));
}

StarForestSpec StarForestSpec::without_largest() const {
  REMH_ENSURE(r() >= 1);
  return StarForestSpec(std::vector<int>(t_.begin() + 1, t_.end()));
}

StarForestSpec decompose_star_forest(const Graph& h) {
  std::vector<int> leaf_counts;
  for (const auto& comp : h.components()) {
    const int size = static_cast<int>(comp.size());
    if (size == 1) continue;  // isolated vertices are stripped
    long long comp_edges = 0;
    int comp_max_degree = 0;
    for (int v : comp) {
      comp_edges += h.degree(v);
      comp_max_degree = std::max(comp_max_degree, h.degree(v));
    }
    comp_edges /= 2;
    // A component is a star K_{1,size-1} iff it is a tree with a vertex
    // adjacent to all others.
    if (comp_edges != size - 1 || comp_max_degree != size - 1)
      throw NotStarForestError("pattern component is not a star", comp);
    leaf_counts.push_back(size - 1);
  }
  return StarForestSpec(std::move(leaf_counts));
}

bool is_star_forest(const Graph& h) {
  try {
    decompose_star_forest(h);
    return true;
  } catch (const NotStarForestError&) {
    return false;
  }
}

}  // namespace remh
