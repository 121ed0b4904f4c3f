#include "remh/generate.hpp"

#include <atomic>
#include <thread>
#include <unordered_set>

#include "remh/canonical.hpp"
#include "remh/errors.hpp"
#include "remh/limits.hpp"
#include "remh/subgraph.hpp"

namespace remh {

namespace {

// All children of `parent` (one new vertex, every neighbourhood subset),
// pruned and canonicalized, in mask order.
std::vector<std::pair<CanonicalCode, Graph>> children_of(
    const Graph& parent, const Graph* forbidden,
    std::atomic<std::uint64_t>& candidates) {
  const int m = parent.vertex_count();
  std::vector<std::pair<CanonicalCode, Graph>> out;
  const std::vector<Edge> parent_edges = parent.edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    candidates.fetch_add(1, std::memory_order_relaxed);
    Graph child(m + 1);
    for (auto [u, v] : parent_edges) child.add_edge(u, v);
    for (int v = 0; v < m; ++v)
      if ((mask >> v) & 1) child.add_edge(v, m);
    if (forbidden && has_subgraph(child, *forbidden)) continue;
    out.push_back(canonical_code_and_form(child));
  }
  return out;
}

}  // namespace

GenerateStats generate_graphs(int n, const GenerateOptions& options,
                              const std::function<void(const Graph&)>& visit) {
  if (n < 1) throw PreconditionError("generation needs at least one vertex");
  const std::uint64_t ceiling = options.candidate_ceiling
                                    ? options.candidate_ceiling
                                    : default_search_ceiling();
  const int jobs = options.jobs < 1 ? 1 : options.jobs;

  GenerateStats stats;
  std::atomic<std::uint64_t> candidates{0};

  std::vector<Graph> level;
  {
    Graph k1(1);
    if (!options.forbidden || !has_subgraph(k1, *options.forbidden))
      level.push_back(k1);
  }

  for (int m = 1; m < n && !level.empty(); ++m) {
    std::vector<std::vector<std::pair<CanonicalCode, Graph>>> buckets(
        level.size());
    if (jobs == 1 || level.size() == 1) {
      for (std::size_t i = 0; i < level.size(); ++i) {
        buckets[i] = children_of(level[i], options.forbidden, candidates);
        if (candidates.load(std::memory_order_relaxed) > ceiling)
          throw ResourceLimitError("graph generation candidate ceiling hit",
                                   ceiling);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::atomic<bool> over{false};
      auto worker = [&]() {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= level.size() || over.load(std::memory_order_relaxed))
            return;
          buckets[i] = children_of(level[i], options.forbidden, candidates);
          if (candidates.load(std::memory_order_relaxed) > ceiling)
            over.store(true, std::memory_order_relaxed);
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      if (over.load())
        throw ResourceLimitError("graph generation candidate ceiling hit",
                                 ceiling);
    }

    std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
    std::vector<Graph> next_level;
    for (auto& bucket : buckets)
      for (auto& [code, form] : bucket)
        if (seen.insert(code).second) next_level.push_back(std::move(form));
    level = std::move(next_level);
  }

  stats.candidates = candidates.load();
  stats.emitted = level.size();
  for (const Graph& g : level) visit(g);
  return stats;
}

std::vector<Graph> generate_trees(int n) {
  if (n < 1) throw PreconditionError("trees have at least one vertex");
  std::vector<Graph> level{Graph(1)};
  for (int m = 1; m < n; ++m) {
    std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
    std::vector<Graph> next_level;
    for (const Graph& parent : level) {
      for (int v = 0; v < m; ++v) {
        Graph child(m + 1);
        for (auto [a, b] : parent.edges()) child.add_edge(a, b);
        child.add_edge(v, m);
        auto [code, form] = canonical_code_and_form(child);
        if (seen.insert(code).second) next_level.push_back(std::move(form));
      }
    }
    level = std::move(next_level);
  }
  return level;
}

}  // namespace remh
