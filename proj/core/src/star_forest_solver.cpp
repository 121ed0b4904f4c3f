#include "remh/star_forest_solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "remh/errors.hpp"
#include "remh/factor.hpp"
#include "remh/limits.hpp"
#include "remh/subgraph.hpp"

namespace remh {

long long threshold_degree(const StarForestSpec& h) {
  const long long v = h.vertex_count();
  const long long d = v - 1;
  return d * (d + 1) * v + d;
}

namespace {

std::string format_edge_count(long long ex, long long m) {
  return "ex = " + std::to_string(ex) + " of e(G) = " + std::to_string(m);
}

struct Solver {
  const StarForestOptions& opt;
  std::uint64_t ceiling;
  std::uint64_t candidates = 0;

  StarForestResult solve(const Graph& g, const StarForestSpec& h) {
    REMH_ENSURE(h.r() >= 1);
    if (h.r() == 1) return single_star(g, h);

    const Graph pattern = h.pattern();
    if (!has_subgraph(g, pattern)) {
      StarForestResult result;
      result.ex = g.edge_count();
      result.rem = 0;
      result.witness = g;
      result.branch_trace.push_back(
          "pattern-free host: " + format_edge_count(result.ex, g.edge_count()));
      return result;
    }

    const long long d_max = g.max_degree();
    const long long threshold = threshold_degree(h);
    if (d_max < threshold) return bounded(g, h, d_max, threshold);
    return high_degree(g, h, threshold);
  }

  // r = 1: a host avoids K_{1,t_1} iff every degree is at most t_1 - 1.
  StarForestResult single_star(const Graph& g, const StarForestSpec& h) {
    const int cap = h.leaf_count(0) - 1;
    FactorResult f = max_degree_constrained_subgraph(
        g, DegreeBudget::uniform(g.vertex_count(), cap));
    StarForestResult result;
    result.ex = f.m;
    result.rem = g.edge_count() - f.m;
    result.witness = f.subgraph;
    result.branch_trace.push_back(
        "single-star base: degree cap " + std::to_string(cap) + ", " +
        format_edge_count(result.ex, g.edge_count()));
    return result;
  }

  StarForestResult bounded(const Graph& g, const StarForestSpec& h,
                           long long degree_bound, long long threshold) {
    StarForestResult result = enumerate_bounded(g, h, degree_bound);
    result.branch_trace.insert(
        result.branch_trace.begin(),
        "bounded-degree branch: max degree " + std::to_string(degree_bound) +
            " < threshold " + std::to_string(threshold));
    return result;
  }

  StarForestResult high_degree(const Graph& g, const StarForestSpec& h,
                               long long threshold) {
    // M1: best host subgraph avoiding even a single largest star.
    StarForestResult star_only = single_star(g, h.prefix(1));

    // M2: keep all edges at u, recurse without the largest star.
    const StarForestSpec rest = h.without_largest();
    long long best_val = -1;
    int best_u = -1;
    StarForestResult best_child;
    std::vector<int> best_labels;
    for (int u = 0; u < g.vertex_count(); ++u) {
      std::vector<int> old_of_new;
      Graph without = g.without_vertex(u, &old_of_new);
      StarForestResult child = solve(without, rest);
      long long val = g.degree(u) + child.ex;
      if (val > best_val) {
        best_val = val;
        best_u = u;
        best_child = std::move(child);
        best_labels = std::move(old_of_new);
      }
    }

    StarForestResult result;
    result.branch_trace.push_back(
        "high-degree branch: max degree " + std::to_string(g.max_degree()) +
        " >= threshold " + std::to_string(threshold) +
        "; M1 = " + std::to_string(star_only.ex) +
        ", M2 = " + std::to_string(best_val) + " at vertex " +
        std::to_string(best_u));
    if (star_only.ex >= best_val) {
      result.ex = star_only.ex;
      result.witness = star_only.witness;
      for (const auto& line : star_only.branch_trace)
        result.branch_trace.push_back("  " + line);
    } else {
      result.ex = best_val;
      Graph witness(g.vertex_count());
      g.neighbors(best_u).for_each(
          [&](int v) { witness.add_edge(best_u, v); });
      for (auto [a, b] : best_child.witness.edges())
        witness.add_edge(best_labels[a], best_labels[b]);
      REMH_ENSURE(witness.edge_count() == best_val);
      result.witness = std::move(witness);
      for (const auto& line : best_child.branch_trace)
        result.branch_trace.push_back("  " + line);
    }
    result.rem = g.edge_count() - result.ex;
    REMH_ENSURE(!has_subgraph(result.witness, h.pattern()));
    return result;
  }

  // The enumeration of candidate pairs (U, F'):
  //   U over all vertex sets with |U| <= min((C+1) v(H), n);
  //   F' over all subgraphs where V(G) \ U is independent, i.e. subsets
  //   of the edges touching U.
  StarForestResult enumerate_bounded(const Graph& g, const StarForestSpec& h,
                                     long long degree_bound) {
    const int n = g.vertex_count();
    const int r = h.r();
    const std::vector<Edge> edges = g.edges();
    const long long m = g.edge_count();

    std::vector<Graph> prefixes;
    for (int i = 0; i <= r; ++i) prefixes.push_back(h.prefix_pattern(i));
    const int t1_cap = h.leaf_count(0) - 1;

    long long max_u_ll =
        std::min<long long>((degree_bound + 1) * h.vertex_count(), n);
    const int max_u = static_cast<int>(max_u_ll);

    long long best = -1;
    std::vector<Edge> best_fp;         // F' edges
    std::vector<Edge> best_fpp;        // F'' edges, original labels
    std::vector<char> in_u(n, 0);
    std::vector<int> deg(n, 0);

    auto process_u = [&](const std::vector<int>& u_set) {
      for (int v : u_set) in_u[v] = 1;
      std::vector<int> rest;
      rest.reserve(n - u_set.size());
      for (int v = 0; v < n; ++v)
        if (!in_u[v]) rest.push_back(v);

      std::vector<int> eu;  // ids of edges touching U
      for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (in_u[edges[e].first] || in_u[edges[e].second]) eu.push_back(e);
      if (eu.size() > 63)
        throw ResourceLimitError(
            "bounded-degree enumeration limited to 63 edges touching U",
            ceiling);

      const std::uint64_t full = eu.size() == 0
                                     ? 0
                                     : (~std::uint64_t{0} >>
                                        (64 - eu.size()));
      std::uint64_t sub = 0;
      while (true) {
        if (++candidates > ceiling)
          throw ResourceLimitError(
              "bounded-degree enumeration candidate ceiling hit", ceiling);

        std::vector<int> touched;
        bool ok = true;
        std::uint64_t bits = sub;
        while (bits) {
          int idx = std::countr_zero(bits);
          bits &= bits - 1;
          auto [a, b] = edges[eu[idx]];
          if (deg[a]++ == 0) touched.push_back(a);
          if (deg[b]++ == 0) touched.push_back(b);
        }
        // Necessary filter: off-U degrees can never exceed t_1 - 1.
        for (int w : touched)
          if (!in_u[w] && deg[w] > t1_cap) {
            ok = false;
            break;
          }

        if (ok) {
          Graph fp(n);
          bits = sub;
          while (bits) {
            int idx = std::countr_zero(bits);
            bits &= bits - 1;
            fp.add_edge(edges[eu[idx]].first, edges[eu[idx]].second);
          }
          if (!has_subgraph(fp, prefixes[r])) {  // step 1: H-free
            int i = 0;                            // step 2: largest prefix
            while (i + 1 <= r - 1 && has_subgraph(fp, prefixes[i + 1])) ++i;
            const int cap = h.leaf_count(i) - 1;  // t_{i+1} - 1
            bool degree_ok = true;                // step 3
            for (int w : touched)
              if (!in_u[w] && deg[w] > cap) {
                degree_ok = false;
                break;
              }
            if (degree_ok) {  // step 4: complete inside V \ U
              DegreeBudget budget{std::vector<int>(rest.size(), 0)};
              for (std::size_t j = 0; j < rest.size(); ++j)
                budget.caps[j] = cap - deg[rest[j]];
              FactorResult completion =
                  max_degree_constrained_subgraph(g.induced(rest), budget);
              long long value =
                  static_cast<long long>(std::popcount(sub)) + completion.m;
              if (opt.candidate_observer) opt.candidate_observer(value);
              if (value > best) {
                best = value;
                best_fp = fp.edges();
                best_fpp.clear();
                for (auto [a, b] : completion.edges)
                  best_fpp.emplace_back(rest[a], rest[b]);
              }
            }
          }
        }

        for (int w : touched) deg[w] = 0;
        if (sub == full || best == m) break;
        sub = (sub + 1) & full;  // plain increment over subsets of eu
      }

      for (int v : u_set) in_u[v] = 0;
    };

    // All U in ascending size, lexicographic within a size.
    bool done = false;
    for (int size = 0; size <= max_u && !done; ++size) {
      std::vector<int> comb(size);
      std::iota(comb.begin(), comb.end(), 0);
      while (true) {
        process_u(comb);
        if (best == m) {
          done = true;
          break;
        }
        if (size == 0) break;
        int i = size - 1;
        while (i >= 0 && comb[i] == n - size + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
      }
    }

    StarForestResult result;
    result.ex = best;
    result.rem = m - best;
    result.candidates = candidates;
    Graph witness(n);
    for (auto [a, b] : best_fp) witness.add_edge(a, b);
    for (auto [a, b] : best_fpp) witness.add_edge(a, b);
    REMH_ENSURE(witness.edge_count() == best);
    REMH_ENSURE(!has_subgraph(witness, prefixes[r]));
    result.witness = std::move(witness);
    result.branch_trace.push_back(
        "enumerated " + std::to_string(candidates) + " (U, F') candidates, " +
        format_edge_count(best, m));
    return result;
  }
};

}  // namespace

StarForestResult ex_star_forest(const Graph& g, const StarForestSpec& h,
                                const StarForestOptions& options) {
  if (h.r() == 0)
    throw InfeasibleError(
        "edgeless pattern fits in the host; edge deletions cannot avoid it");
  Solver solver{options,
                options.candidate_ceiling ? options.candidate_ceiling
                                          : default_search_ceiling()};
  StarForestResult result = solver.solve(g, h);
  result.candidates = solver.candidates;
  REMH_ENSURE(!has_subgraph(result.witness, h.pattern()));
  REMH_ENSURE(result.witness.edge_count() == result.ex);
  REMH_ENSURE(result.ex + result.rem == g.edge_count());
  return result;
}

StarForestResult ex_star_forest(const Graph& g, const Graph& pattern,
                                const StarForestOptions& options) {
  if (pattern.vertex_count() > g.vertex_count()) {
    StarForestResult result;
    result.ex = g.edge_count();
    result.rem = 0;
    result.witness = g;
    result.branch_trace.push_back(
        "pattern has more vertices than the host: every subgraph is "
        "pattern-free");
    return result;
  }
  return ex_star_forest(g, decompose_star_forest(pattern), options);
}

StarForestResult ex_bounded_degree(const Graph& g, const StarForestSpec& h,
                                   long long degree_bound,
                                   const StarForestOptions& options) {
  if (h.r() == 0)
    throw InfeasibleError(
        "edgeless pattern fits in the host; edge deletions cannot avoid it");
  if (degree_bound < g.max_degree())
    throw PreconditionError(
        "bounded-degree enumeration needs degree_bound >= max degree");
  Solver solver{options,
                options.candidate_ceiling ? options.candidate_ceiling
                                          : default_search_ceiling()};
  StarForestResult result = solver.enumerate_bounded(g, h, degree_bound);
  REMH_ENSURE(!has_subgraph(result.witness, h.pattern()));
  return result;
}

}  // namespace remh
