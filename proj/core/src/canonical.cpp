#include "remh/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "remh/errors.hpp"
#include "remh/io.hpp"

namespace remh {

namespace {

using Cells = std::vector<std::vector<int>>;

// One refinement pass: split some cell by neighbour counts against the
// current cells.  Returns false at the equitable fixpoint.  Split pieces
// are ordered by signature, descending, which depends only on structure,
// so refinement commutes with isomorphism.
bool split_once(const Graph& g, Cells& cells) {
  const int n = g.vertex_count();
  std::vector<int> cell_of(n);
  for (std::size_t ci = 0; ci < cells.size(); ++ci)
    for (int v : cells[ci]) cell_of[v] = static_cast<int>(ci);

  std::vector<std::vector<int>> counts(n,
                                       std::vector<int>(cells.size(), 0));
  for (int v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](int u) { ++counts[v][cell_of[u]]; });

  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    auto& cell = cells[ci];
    if (cell.size() <= 1) continue;
    bool uniform = true;
    for (std::size_t i = 1; i < cell.size() && uniform; ++i)
      uniform = counts[cell[i]] == counts[cell[0]];
    if (uniform) continue;

    std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
      return counts[a] > counts[b];
    });
    Cells pieces;
    for (int v : cell) {
      if (pieces.empty() || counts[pieces.back().front()] != counts[v])
        pieces.emplace_back();
      pieces.back().push_back(v);
    }
    Cells next;
    next.reserve(cells.size() + pieces.size() - 1);
    for (std::size_t cj = 0; cj < cells.size(); ++cj) {
      if (cj == ci)
        for (auto& p : pieces) next.push_back(std::move(p));
      else
        next.push_back(std::move(cells[cj]));
    }
    cells = std::move(next);
    return true;
  }
  return false;
}

void refine(const Graph& g, Cells& cells) {
  while (split_once(g, cells)) {
  }
}

struct Canonicalizer {
  const Graph& g;
  int n;
  CanonicalCode best;
  std::vector<int> best_order;  // old_of_new

  explicit Canonicalizer(const Graph& graph)
      : g(graph), n(graph.vertex_count()) {}

  CanonicalCode code_of(const std::vector<int>& old_of_new) const {
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    CanonicalCode code(1 + (nbits + 63) / 64, 0);
    code[0] = static_cast<std::uint64_t>(n);
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (g.has_edge(old_of_new[i], old_of_new[j]))
          code[1 + bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
    return code;
  }

  void search(Cells& cells) {
    std::size_t open = cells.size();
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
      if (cells[ci].size() > 1) {
        open = ci;
        break;
      }
    if (open == cells.size()) {
      std::vector<int> order;
      order.reserve(n);
      for (const auto& cell : cells) order.push_back(cell.front());
      CanonicalCode code = code_of(order);
      if (best.empty() || code > best) {
        best = std::move(code);
        best_order = std::move(order);
      }
      return;
    }
    for (int v : cells[open]) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (ci == open) {
          child.push_back({v});
          std::vector<int> rest;
          for (int u : cells[open])
            if (u != v) rest.push_back(u);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[ci]);
        }
      }
      refine(g, child);
      search(child);
    }
  }

  void run() {
    if (n == 0) {
      best = {0};
      return;
    }
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    Cells cells{all};
    refine(g, cells);
    search(cells);
  }
};

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  Canonicalizer c(g);
  c.run();
  return c.best;
}

std::vector<int> canonical_labeling(const Graph& g) {
  Canonicalizer c(g);
  c.run();
  std::vector<int> new_of_old(g.vertex_count());
  for (int pos = 0; pos < g.vertex_count(); ++pos)
    new_of_old[c.best_order[pos]] = pos;
  return new_of_old;
}

Graph canonical_form(const Graph& g) {
  return g.relabeled(canonical_labeling(g));
}

std::pair<CanonicalCode, Graph> canonical_code_and_form(const Graph& g) {
  Canonicalizer c(g);
  c.run();
  if (g.vertex_count() == 0) return {c.best, Graph(0)};
  std::vector<int> new_of_old(g.vertex_count());
  for (int pos = 0; pos < g.vertex_count(); ++pos)
    new_of_old[c.best_order[pos]] = pos;
  return {c.best, g.relabeled(new_of_old)};
}

std::string canonical_graph6(const Graph& g) {
  return to_graph6(canonical_form(g));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace remh
