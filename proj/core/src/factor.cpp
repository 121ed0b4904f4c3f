#include "remh/factor.hpp"

#include <algorithm>

#include "remh/errors.hpp"
#include "remh/matching.hpp"

namespace remh {

DegreeBudget DegreeBudget::uniform(int n, int cap) {
  if (n < 0 || cap < 0)
    throw PreconditionError("degree budget needs n >= 0 and cap >= 0");
  return DegreeBudget{std::vector<int>(n, cap)};
}

void DegreeBudget::validate(const Graph& g) const {
  if (static_cast<int>(caps.size()) != g.vertex_count())
    throw PreconditionError("degree budget size must match vertex count");
  for (int c : caps)
    if (c < 0) throw PreconditionError("degree caps must be non-negative");
}

DegreeBudget DegreeBudget::clamped(const Graph& g) const {
  validate(g);
  DegreeBudget out{caps};
  for (int v = 0; v < g.vertex_count(); ++v)
    out.caps[v] = std::min(out.caps[v], g.degree(v));
  return out;
}

std::pair<Graph, GadgetMap> build_gadget(const Graph& g,
                                         const DegreeBudget& budget) {
  budget.validate(g);
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (budget.caps[v] > g.degree(v))
      throw PreconditionError("build_gadget needs a clamped budget");

  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());

  GadgetMap map;
  map.pair_vertices.reserve(m);
  for (int e = 0; e < m; ++e) map.pair_vertices.emplace_back(2 * e, 2 * e + 1);

  map.slack_vertices.resize(n);
  int next = 2 * m;
  for (int v = 0; v < n; ++v) {
    const int slack = g.degree(v) - budget.caps[v];
    for (int i = 0; i < slack; ++i) map.slack_vertices[v].push_back(next++);
    map.slack_total += slack;
  }

  Graph gadget(next);
  // Pair edges e_x e_y.
  for (int e = 0; e < m; ++e) gadget.add_edge(2 * e, 2 * e + 1);
  // Slack vertices of x join the x-side pair vertex of every edge at x.
  for (int e = 0; e < m; ++e) {
    auto [x, y] = edges[e];
    for (int s : map.slack_vertices[x]) gadget.add_edge(s, 2 * e);
    for (int s : map.slack_vertices[y]) gadget.add_edge(s, 2 * e + 1);
  }
  return {std::move(gadget), std::move(map)};
}

FactorResult max_degree_constrained_subgraph(const Graph& g,
                                             const DegreeBudget& budget) {
  const DegreeBudget caps = budget.clamped(g);
  auto [gadget, map] = build_gadget(g, caps);

  Matching matching = max_matching(gadget);
  std::vector<int>& mate = matching.mate;

  const std::vector<Edge> edges = g.edges();
  const int n = g.vertex_count();

  // Incident edge ids per vertex, ascending.
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }
  auto side = [&](int v, int e) {
    return edges[e].first == v ? map.pair_vertices[e].first
                               : map.pair_vertices[e].second;
  };

  // Repair pass: an uncovered slack vertex of v steals the v-side pair
  // vertex of some edge whose pair vertices are matched together.  Such an
  // edge always exists in a maximum matching, and the exchange keeps the
  // matching maximum.
  for (int v = 0; v < n; ++v) {
    for (int s : map.slack_vertices[v]) {
      if (mate[s] != -1) continue;
      bool repaired = false;
      for (int e : incident[v]) {
        auto [px, py] = map.pair_vertices[e];
        if (mate[px] == py) {
          int mine = side(v, e);
          int theirs = mine == px ? py : px;
          mate[theirs] = -1;
          mate[mine] = s;
          mate[s] = mine;
          repaired = true;
          break;
        }
      }
      REMH_ENSURE(repaired);
    }
  }

  FactorResult result;
  result.matching_size = matching.size();
  result.slack_total = map.slack_total;
  result.subgraph = Graph(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [px, py] = map.pair_vertices[e];
    if (mate[px] == py) {
      result.edges.push_back(edges[e]);
      result.subgraph.add_edge(edges[e].first, edges[e].second);
    }
  }
  result.m = static_cast<long long>(result.edges.size());

  // nu(G') = m + sum_x (d(x) - f(x)); degrees respect the caps.
  REMH_ENSURE(result.matching_size == result.m + result.slack_total);
  for (int v = 0; v < n; ++v)
    REMH_ENSURE(result.subgraph.degree(v) <= caps.caps[v]);
  return result;
}

}  // namespace remh
