#include "remh/matching.hpp"

#include <algorithm>

#include "remh/errors.hpp"

namespace remh {

namespace {

// Classic blossom-contraction search: BFS an alternating tree from each
// exposed root, contracting odd cycles onto their base vertex.
struct BlossomSolver {
  const Graph& g;
  int n;
  std::vector<int> mate, parent, base;
  std::vector<char> used, in_blossom;
  std::vector<int> queue;

  explicit BlossomSolver(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        mate(n, -1),
        parent(n, -1),
        base(n, 0),
        used(n, 0),
        in_blossom(n, 0) {}

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = 1;
      in_blossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  }

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(n, 0);
    int v = a;
    while (true) {
      v = base[v];
      seen[v] = 1;
      if (mate[v] == -1) break;
      v = parent[mate[v]];
    }
    int u = b;
    while (true) {
      u = base[u];
      if (seen[u]) return u;
      u = parent[mate[u]];
    }
  }

  // Grows an alternating tree from root; returns an exposed vertex ending
  // an augmenting path, or -1.
  int find_augmenting_path(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      int to = -1;
      for (to = g.neighbors(v).next(); to >= 0;
           to = g.neighbors(v).next(to + 1)) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
          // Odd cycle: contract the blossom onto the common base.
          int cur_base = lowest_common_base(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (mate[to] == -1) return to;
          used[mate[to]] = 1;
          queue.push_back(mate[to]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent[v];
      int next = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = next;
    }
  }

  void run() {
    for (int v = 0; v < n; ++v) {
      if (mate[v] != -1) continue;
      int end = find_augmenting_path(v);
      if (end != -1) augment(end);
    }
  }
};

}  // namespace

Matching max_matching(const Graph& g) {
  BlossomSolver solver(g);
  solver.run();

  Matching m;
  m.mate = std::move(solver.mate);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int u = m.mate[v];
    if (u != -1) {
      REMH_ENSURE(m.mate[u] == v && g.has_edge(u, v));
      if (v < u) m.edges.emplace_back(v, u);
    }
  }
  return m;
}

}  // namespace remh
