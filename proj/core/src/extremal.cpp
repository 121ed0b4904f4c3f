#include "remh/extremal.hpp"

#include <algorithm>

#include "remh/errors.hpp"
#include "remh/generate.hpp"
#include "remh/io.hpp"

namespace remh {

Rational es_bound(const TreeSpec& tree, long long n) {
  return Rational(static_cast<long long>(tree.k - 2) * n, 2);
}

HeavyVertexResult heavy_vertex(const Graph& g, const Rational& t) {
  if (t < Rational(0) || t > Rational(1))
    throw PreconditionError("heavy_vertex requires t in [0, 1]");
  if (g.edge_count() < 1)
    throw PreconditionError("heavy_vertex requires at least one edge");
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      throw PreconditionError(
          "heavy_vertex is undefined on graphs with isolated vertices");

  const Rational dbar(2 * g.edge_count(), n);
  HeavyVertexResult best;
  for (int u = 0; u < n; ++u) {
    Rational sum(0);
    g.neighbors(u).for_each(
        [&](int v) { sum += Rational(1) - t * dbar / g.degree(v); });
    if (best.vertex < 0 || sum > best.value) {
      best.vertex = u;
      best.value = sum;
    }
  }
  REMH_ENSURE(best.value >= (Rational(1) - t) * dbar);
  return best;
}

std::vector<std::vector<int>> partition_indices(const std::vector<int>& gamma,
                                                const std::vector<int>& s) {
  const int p = static_cast<int>(gamma.size());
  const int l = static_cast<int>(s.size());
  if (p < 1) throw PreconditionError("partition_indices requires p >= 1");
  if (l < 2) throw PreconditionError("partition_indices requires l >= 2");
  for (int i = 0; i < p; ++i) {
    if (gamma[i] < 0)
      throw PreconditionError("partition_indices requires nonnegative gamma");
    if (i > 0 && gamma[i - 1] > gamma[i])
      throw PreconditionError("partition_indices requires ascending gamma");
  }
  for (int i = 0; i < l; ++i)
    if (s[i] < gamma[p - 1] + 1)
      throw PreconditionError("partition_indices requires s_" +
                              std::to_string(i + 1) + " >= gamma_p + 1 = " +
                              std::to_string(gamma[p - 1] + 1));

  // Peel the minimal feasible suffix {q, ..., limit} as class J_level,
  // then recurse on the prefix with one class fewer.
  std::vector<std::vector<int>> classes(l);
  int limit = p;
  int level = l;
  while (true) {
    long long suffix = 0;
    int q = limit + 1;
    for (int i = limit; i >= 1; --i) {
      if (suffix + 1 + gamma[i - 1] > s[level - 1]) break;
      suffix += 1 + gamma[i - 1];
      q = i;
    }
    REMH_ENSURE(q <= limit);  // s_i >= gamma_p + 1 keeps q well-defined
    for (int j = q; j <= limit; ++j) classes[level - 1].push_back(j);
    if (q == 1) break;  // remaining classes stay empty
    if (level == 2) {
      for (int j = 1; j < q; ++j) classes[0].push_back(j);
      break;
    }
    limit = q - 1;
    --level;
  }

  // The peeling realizes the existence proof, so an infeasible class
  // certifies that the aggregate hypothesis on sum s_i was violated.
  std::vector<char> seen(p + 1, 0);
  for (int i = 0; i < l; ++i) {
    long long need = 0;
    for (int j : classes[i]) {
      REMH_ENSURE(j >= 1 && j <= p && !seen[j]);
      seen[j] = 1;
      need += 1 + gamma[j - 1];
    }
    if (s[i] < need)
      throw PreconditionError(
          "no feasible partition: s_" + std::to_string(i + 1) + " = " +
          std::to_string(s[i]) + " < " + std::to_string(need) +
          " = sum over J_" + std::to_string(i + 1) +
          " of (1 + gamma_j); the hypothesis on sum s_i is violated");
  }
  for (int j = 1; j <= p; ++j) REMH_ENSURE(seen[j]);
  return classes;
}

bool is_clique_union(const Graph& g, int q) {
  if (q < 1) throw PreconditionError("clique size must be positive");
  if (g.vertex_count() % q != 0) return false;
  for (const auto& comp : g.components()) {
    const int size = static_cast<int>(comp.size());
    if (size != q) return false;
    if (g.induced(comp).edge_count() !=
        static_cast<long long>(q) * (q - 1) / 2)
      return false;
  }
  return true;
}

SescVerdict verify_sesc(const TreeSpec& tree, int n,
                        const SescOptions& options) {
  if (tree.k < 2)
    throw PreconditionError("verification requires a tree on >= 2 vertices");
  if (n < 1) throw PreconditionError("host order must be positive");

  SescVerdict verdict;
  verdict.k = tree.k;
  verdict.n = n;

  GenerateOptions gen;
  gen.forbidden = &tree.tree;
  gen.jobs = options.jobs;
  gen.candidate_ceiling = options.candidate_ceiling;
  const long long threshold = static_cast<long long>(tree.k - 2) * n;
  GenerateStats stats = generate_graphs(n, gen, [&](const Graph& g) {
    ++verdict.tree_free_count;
    if (2 * g.edge_count() < threshold) return;
    std::string code = to_graph6(g);
    verdict.extremal.push_back(code);
    if (!is_clique_union(g, tree.k - 1))
      verdict.counterexamples.push_back(std::move(code));
  });
  verdict.candidates = stats.candidates;
  std::sort(verdict.extremal.begin(), verdict.extremal.end());
  std::sort(verdict.counterexamples.begin(), verdict.counterexamples.end());
  verdict.holds = verdict.counterexamples.empty();
  return verdict;
}

}  // namespace remh
