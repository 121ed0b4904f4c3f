#include "remh/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "remh/errors.hpp"
#include "remh/limits.hpp"
#include "remh/subgraph.hpp"

namespace remh {

namespace {

struct DeletionKey {
  std::uint64_t lo = 0, hi = 0;
  bool operator==(const DeletionKey&) const = default;
};

struct DeletionKeyHash {
  std::size_t operator()(const DeletionKey& k) const {
    std::uint64_t h = k.lo * 1099511628211ull;
    h ^= k.hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct Searcher {
  const Graph& pattern;
  Graph work;
  std::vector<Edge> host_edges;
  std::vector<int> edge_id;  // flattened n*n lookup
  int n;
  bool use_memo;
  std::unordered_map<DeletionKey, int, DeletionKeyHash> memo;
  DeletionKey key;
  std::vector<int> deleted;  // edge ids along the current path
  std::uint64_t nodes = 0;
  std::uint64_t ceiling;

  Searcher(const Graph& host, const Graph& pat, std::uint64_t node_ceiling)
      : pattern(pat),
        work(host),
        host_edges(host.edges()),
        n(host.vertex_count()),
        ceiling(node_ceiling) {
    use_memo = host_edges.size() <= 128;
    edge_id.assign(static_cast<std::size_t>(n) * n, -1);
    for (int e = 0; e < static_cast<int>(host_edges.size()); ++e) {
      auto [u, v] = host_edges[e];
      edge_id[static_cast<std::size_t>(u) * n + v] = e;
      edge_id[static_cast<std::size_t>(v) * n + u] = e;
    }
  }

  void toggle(int id, bool remove) {
    auto [u, v] = host_edges[id];
    if (remove)
      work.remove_edge(u, v);
    else
      work.add_edge(u, v);
    std::uint64_t bit = std::uint64_t{1} << (id & 63);
    (id < 64 ? key.lo : key.hi) ^= bit;
  }

  // True iff some set of at most `budget` further deletions makes `work`
  // pattern-free; on success `deleted` holds the chosen edge ids.
  bool dfs(int budget) {
    if (++nodes > ceiling)
      throw ResourceLimitError("search node ceiling hit", ceiling);
    if (use_memo) {
      auto it = memo.find(key);
      if (it != memo.end() && it->second >= budget) return false;
    }
    auto witness = contains_subgraph(work, pattern);
    if (!witness) return true;
    if (budget > 0) {
      // Branch on deleting each edge of the found copy, ascending.
      std::vector<int> ids;
      for (auto [a, b] : pattern.edges()) {
        int u = (*witness)[a], v = (*witness)[b];
        ids.push_back(edge_id[static_cast<std::size_t>(u) * n + v]);
      }
      std::sort(ids.begin(), ids.end());
      for (int id : ids) {
        toggle(id, true);
        deleted.push_back(id);
        if (dfs(budget - 1)) return true;
        deleted.pop_back();
        toggle(id, false);
      }
    }
    if (use_memo) {
      auto [it, inserted] = memo.try_emplace(key, budget);
      if (!inserted && it->second < budget) it->second = budget;
    }
    return false;
  }
};

}  // namespace

OracleResult rem_exact(const Graph& host, const Graph& pattern,
                       const OracleOptions& options) {
  if (pattern.edge_count() == 0 &&
      pattern.vertex_count() <= host.vertex_count())
    throw InfeasibleError(
        "pattern has no edges and fits in the host; edge deletions cannot "
        "avoid it");

  const std::uint64_t ceiling =
      options.node_ceiling ? options.node_ceiling : default_search_ceiling();
  const long long m = host.edge_count();
  long long max_budget = m;
  if (options.budget) {
    if (*options.budget < 0)
      throw PreconditionError("deletion budget must be non-negative");
    max_budget = std::min<long long>(*options.budget, m);
  }

  Searcher searcher(host, pattern, ceiling);
  for (long long b = 0; b <= max_budget; ++b) {
    if (searcher.dfs(static_cast<int>(b))) {
      OracleResult result;
      result.solved = true;
      result.rem = static_cast<int>(searcher.deleted.size());
      REMH_ENSURE(result.rem == b);
      result.ex = m - result.rem;
      std::sort(searcher.deleted.begin(), searcher.deleted.end());
      for (int id : searcher.deleted)
        result.deleted_edges.push_back(searcher.host_edges[id]);
      result.witness = searcher.work;
      result.nodes = searcher.nodes;
      REMH_ENSURE(!has_subgraph(result.witness, pattern));
      return result;
    }
  }

  // Deleting every edge leaves a pattern-free graph whenever the pattern
  // has an edge, so an unbounded search always returns above.
  REMH_ENSURE(options.budget && *options.budget < m);
  OracleResult result;
  result.solved = false;
  result.exceeded_budget = *options.budget;
  result.nodes = searcher.nodes;
  return result;
}

long long ex_exact(const Graph& host, const Graph& pattern,
                   const OracleOptions& options) {
  OracleOptions opt = options;
  opt.budget.reset();
  return rem_exact(host, pattern, opt).ex;
}

}  // namespace remh
