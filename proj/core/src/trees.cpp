#include "remh/trees.hpp"

#include <algorithm>
#include <numeric>

#include "remh/errors.hpp"

namespace remh {

namespace {

std::vector<int> bfs_distances(const Graph& g, int s) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    g.neighbors(v).for_each([&](int w) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

int farthest(const std::vector<int>& dist) {
  int best = 0;
  for (std::size_t v = 1; v < dist.size(); ++v)
    if (dist[v] > dist[best]) best = static_cast<int>(v);
  return best;  // smallest index among maxima
}

// Tree centers by simultaneous leaf peeling: one center for even
// diameter, two adjacent centers for odd diameter.
std::vector<int> tree_centers(const Graph& t) {
  const int n = t.vertex_count();
  if (n == 1) return {0};
  std::vector<int> deg = t.degrees();
  std::vector<char> alive(n, 1);
  int remaining = n;
  std::vector<int> frontier;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) frontier.push_back(v);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : frontier) {
      alive[v] = 0;
      --remaining;
      t.neighbors(v).for_each([&](int w) {
        if (alive[w] && --deg[w] == 1) next.push_back(w);
      });
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (alive[v]) centers.push_back(v);
  return centers;
}

}  // namespace

TreeSpec classify_tree(const Graph& t) {
  const int k = t.vertex_count();
  if (k < 1) throw NotATreeError("a tree has at least one vertex");
  if (t.edge_count() != k - 1 || !t.is_connected())
    throw NotATreeError("not a tree: need a connected graph with n-1 edges");

  TreeSpec spec;
  spec.tree = t;
  spec.k = k;

  if (k == 1) {
    spec.diameter = 0;
  } else {
    int u = farthest(bfs_distances(t, 0));
    std::vector<int> du = bfs_distances(t, u);
    spec.diameter = du[farthest(du)];
  }
  spec.is_star = spec.diameter <= 2;

  if (spec.is_star) {
    int hub = 0;
    for (int v = 1; v < k; ++v)
      if (t.degree(v) > t.degree(hub)) hub = v;
    spec.center = hub;
    return spec;
  }

  if (spec.diameter > 4) return spec;  // no center decomposition

  std::vector<int> centers = tree_centers(t);
  int a = centers[0];
  if (centers.size() == 2) {
    int b = centers[1];
    a = t.degree(b) > t.degree(a) ? b : a;
  }
  spec.center = a;

  struct Branch {
    int b;
    std::vector<int> leaves;
  };
  std::vector<Branch> branches;
  t.neighbors(a).for_each([&](int b) {
    Branch br{b, {}};
    t.neighbors(b).for_each([&](int c) {
      if (c != a) br.leaves.push_back(c);
    });
    branches.push_back(std::move(br));
  });
  std::stable_sort(branches.begin(), branches.end(),
                   [](const Branch& x, const Branch& y) {
                     return x.leaves.size() < y.leaves.size();
                   });

  int covered = 1;
  for (auto& br : branches) {
    covered += 1 + static_cast<int>(br.leaves.size());
    spec.branch_vertices.push_back(br.b);
    spec.gamma.push_back(static_cast<int>(br.leaves.size()));
    spec.leaf_sets.push_back(std::move(br.leaves));
  }
  // Every vertex of a diameter <= 4 tree is within distance 2 of the center.
  REMH_ENSURE(covered == k);
  return spec;
}

TreeSpec strip_leaves(const TreeSpec& t) {
  if (t.k <= 2)
    throw PreconditionError(
        "strip_leaves requires a tree on at least 3 vertices");
  std::vector<int> keep;
  for (int v = 0; v < t.k; ++v)
    if (t.tree.degree(v) >= 2) keep.push_back(v);
  REMH_ENSURE(!keep.empty());
  return classify_tree(t.tree.induced(keep));
}

}  // namespace remh
