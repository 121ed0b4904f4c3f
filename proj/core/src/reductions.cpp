#include "remh/reductions.hpp"

#include <boost/dynamic_bitset.hpp>

#include <functional>

#include "remh/canonical.hpp"
#include "remh/errors.hpp"
#include "remh/oracle.hpp"

namespace remh {

namespace {

// Constructed hosts use adjacency bitsets, so quadratic memory: cap the
// blow-up rather than letting a large input exhaust the machine.
constexpr long long kMaxConstructedVertices = 20000;

}  // namespace

PendantInstance pendant_expand(const Graph& g, const TreeSpec& tree) {
  if (tree.diameter < 5)
    throw PreconditionError(
        "pendant expansion requires a tree of diameter at least 5");
  TreeSpec stripped = strip_leaves(tree);
  REMH_ENSURE(stripped.diameter >= 3);  // the stripped core is never a star

  const long long n = g.vertex_count();
  const long long leaves = n * (n - 1) / 2 + tree.k;
  const long long total = n + n * leaves;
  if (total > kMaxConstructedVertices)
    throw ResourceLimitError("pendant expansion output too large",
                             kMaxConstructedVertices);

  PendantInstance instance;
  instance.source = g;
  instance.tree = tree;
  instance.stripped = std::move(stripped);
  instance.leaves_per_vertex = leaves;

  Graph constructed(static_cast<int>(total));
  for (auto [a, b] : g.edges()) constructed.add_edge(a, b);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int begin = static_cast<int>(n + v * leaves);
    const int end = static_cast<int>(begin + leaves);
    for (int leaf = begin; leaf < end; ++leaf) constructed.add_edge(v, leaf);
    instance.leaf_ranges.emplace_back(begin, end);
  }
  instance.constructed = std::move(constructed);
  return instance;
}

IdentityReport validate_pendant(const PendantInstance& instance,
                                std::uint64_t node_ceiling) {
  OracleOptions opt;
  opt.node_ceiling = node_ceiling;
  IdentityReport report;
  report.lhs = rem_exact(instance.source, instance.stripped.tree, opt).rem;
  report.rhs = rem_exact(instance.constructed, instance.tree.tree, opt).rem;
  report.holds = report.lhs == report.rhs;
  return report;
}

PadInstance disjoint_pad(const Graph& g, const Graph& pattern) {
  const auto comps = pattern.components();
  if (pattern.edge_count() !=
      pattern.vertex_count() - static_cast<long long>(comps.size()))
    throw PreconditionError("padding requires a forest pattern");

  std::vector<Graph> parts;
  std::vector<CanonicalCode> codes;
  std::vector<char> star;
  for (const auto& comp : comps) {
    Graph part = pattern.induced(comp);
    star.push_back(part.max_degree() == part.vertex_count() - 1);
    codes.push_back(canonical_code(part));
    parts.push_back(std::move(part));
  }

  // T_1: the non-star component with the most edges, smallest canonical
  // code on ties.
  int selected = -1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (star[i]) continue;
    if (selected < 0 ||
        parts[i].edge_count() > parts[selected].edge_count() ||
        (parts[i].edge_count() == parts[selected].edge_count() &&
         codes[i] < codes[selected]))
      selected = static_cast<int>(i);
  }
  if (selected < 0)
    throw PreconditionError(
        "padding requires a pattern with a non-star component");

  PadInstance instance;
  instance.source = g;
  instance.pattern = pattern;
  instance.selected_component = parts[selected];
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (codes[i] == codes[selected]) ++instance.multiplicity;
  instance.reduced_pattern =
      disjoint_copies(parts[selected], instance.multiplicity);

  const long long n = g.vertex_count();
  const long long copies = n * n;
  instance.copies_per_component = copies;
  long long total = n;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (codes[i] != codes[selected]) total += copies * parts[i].vertex_count();
  if (total > kMaxConstructedVertices)
    throw ResourceLimitError("padding output too large",
                             kMaxConstructedVertices);

  Graph constructed(static_cast<int>(total));
  for (auto [a, b] : g.edges()) constructed.add_edge(a, b);
  int offset = static_cast<int>(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (codes[i] == codes[selected]) continue;
    for (long long copy = 0; copy < copies; ++copy) {
      for (auto [a, b] : parts[i].edges())
        constructed.add_edge(offset + a, offset + b);
      offset += parts[i].vertex_count();
    }
  }
  instance.constructed = std::move(constructed);
  return instance;
}

IdentityReport validate_pad(const PadInstance& instance,
                            std::uint64_t node_ceiling) {
  OracleOptions opt;
  opt.node_ceiling = node_ceiling;
  IdentityReport report;
  report.lhs = ex_exact(instance.constructed, instance.pattern, opt);
  report.rhs = instance.constructed.edge_count() -
               instance.source.edge_count() +
               ex_exact(instance.source, instance.reduced_pattern, opt);
  report.holds = report.lhs == report.rhs;
  return report;
}

UnionIdentityReport verify_union_identity(const Graph& g, const Graph& c,
                                          int k,
                                          std::uint64_t node_ceiling) {
  if (k < 2) throw PreconditionError("union identity requires k >= 2");
  if (c.edge_count() < 1)
    throw PreconditionError("union identity requires a pattern with an edge");
  if (!c.is_connected())
    throw PreconditionError("union identity requires a connected pattern");

  OracleOptions opt;
  opt.node_ceiling = node_ceiling;
  const Graph kc = disjoint_copies(c, k);
  UnionIdentityReport report;
  report.lhs = ex_exact(disjoint_copies(g, k), kc, opt);
  report.rhs_first = ex_exact(disjoint_copies(g, k - 1), kc, opt);
  report.rhs_second = ex_exact(g, c, opt);
  report.holds = report.lhs == report.rhs_first + report.rhs_second;
  return report;
}

namespace {

bool clique_factor_search(const Graph& g, std::vector<char>& assigned,
                          int remaining, int q) {
  if (remaining == 0) return true;
  int v = 0;
  while (assigned[v]) ++v;

  std::vector<int> cand;
  g.neighbors(v).for_each([&](int u) {
    if (!assigned[u]) cand.push_back(u);
  });
  if (static_cast<int>(cand.size()) < q - 1) return false;

  std::vector<int> pick;
  std::function<bool(std::size_t)> choose = [&](std::size_t start) -> bool {
    if (static_cast<int>(pick.size()) == q - 1) {
      assigned[v] = 1;
      for (int u : pick) assigned[u] = 1;
      if (clique_factor_search(g, assigned, remaining - q, q)) return true;
      assigned[v] = 0;
      for (int u : pick) assigned[u] = 0;
      return false;
    }
    for (std::size_t i = start; i < cand.size(); ++i) {
      if (cand.size() - i < q - 1 - pick.size()) break;
      bool clique = true;
      for (int w : pick)
        if (!g.has_edge(cand[i], w)) {
          clique = false;
          break;
        }
      if (!clique) continue;
      pick.push_back(cand[i]);
      if (choose(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return choose(0);
}

}  // namespace

bool has_clique_factor(const Graph& g, int q) {
  if (q < 1) throw PreconditionError("clique factor size must be positive");
  if (g.vertex_count() % q != 0)
    throw PreconditionError(
        "clique factor size must divide the vertex count");
  if (q == 1) return true;
  std::vector<char> assigned(g.vertex_count(), 0);
  return clique_factor_search(g, assigned, g.vertex_count(), q);
}

bool contains_balanced_biclique(const Graph& g) {
  const int target = g.vertex_count() / 2;
  boost::dynamic_bitset<> sums(target + 1);
  sums[0] = true;
  for (int size : complement_component_sizes(g))
    if (size <= target) sums |= sums << size;
  return sums[target];
}

}  // namespace remh
