// remh — command-line front end for the H-free edge-deletion library.
// JSON reports on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 infeasible or budget/ceiling exceeded, 2 usage.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "remh/canonical.hpp"
#include "remh/errors.hpp"
#include "remh/extremal.hpp"
#include "remh/factor.hpp"
#include "remh/generate.hpp"
#include "remh/graph.hpp"
#include "remh/io.hpp"
#include "remh/matching.hpp"
#include "remh/oracle.hpp"
#include "remh/reductions.hpp"
#include "remh/star_forest.hpp"
#include "remh/star_forest_solver.hpp"
#include "remh/subgraph.hpp"
#include "remh/trees.hpp"

using json = nlohmann::ordered_json;
using namespace remh;

namespace {

// Inputs larger than this route through the exponential oracle only with
// an explicit --budget or --yes-exponential.
constexpr long long kExponentialGateEdges = 24;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

GraphFormat resolve_format(const std::string& flag, const std::string& path) {
  if (flag == "g6") return GraphFormat::graph6;
  if (flag == "edges") return GraphFormat::edge_list;
  if (flag != "auto") throw UsageError("unknown --format: " + flag);
  if (ends_with(path, ".g6")) return GraphFormat::graph6;
  if (ends_with(path, ".el") || ends_with(path, ".edges"))
    return GraphFormat::edge_list;
  return GraphFormat::auto_detect;
}

Graph load_graph(const std::string& path, const std::string& format_flag) {
  return parse_graph(read_source(path), resolve_format(format_flag, path));
}

json graph_json(const Graph& g) {
  return json{{"graph6", to_graph6(g)},
              {"fingerprint", fingerprint(g)},
              {"vertices", g.vertex_count()},
              {"edges", g.edge_count()}};
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back(json::array({u, v}));
  return out;
}

json report_skeleton(const std::string& command,
                     const std::vector<std::string>& argv) {
  json report;
  report["command"] = command;
  report["argv"] = argv;
  return report;
}

void emit(json& report, Clock::time_point start) {
  report["wall_time_ms"] = ms_since(start);
  std::cout << report.dump(2) << "\n";
}

std::vector<Edge> deleted_edges_of(const Graph& host, const Graph& witness) {
  std::vector<Edge> deleted;
  for (auto [u, v] : host.edges())
    if (!witness.has_edge(u, v)) deleted.push_back({u, v});
  return deleted;
}

// Shared driver for `rem` and `ex`.
int run_rem_ex(const std::string& command, const std::vector<std::string>& argv,
               const std::string& graph_path, const std::string& pattern_path,
               const std::string& format_flag, std::string method,
               long long budget, bool yes_exponential) {
  Clock::time_point start = Clock::now();
  Graph g = load_graph(graph_path, format_flag);
  Graph pattern = load_graph(pattern_path, format_flag);

  bool star_forest_pattern = is_star_forest(pattern);
  if (method == "auto") {
    method = star_forest_pattern ? "starforest" : "oracle";
    if (method == "oracle")
      std::cerr << "warning: the pattern is not a star forest; using the "
                   "exponential bounded-search-tree oracle\n";
  }

  json report = report_skeleton(command, argv);
  report["inputs"] = {{"graph", graph_json(g)},
                      {"pattern", graph_json(pattern)}};
  report["method"] = method;

  try {
    if (method == "starforest") {
      StarForestResult r = ex_star_forest(g, pattern);
      REMH_ENSURE(!has_subgraph(r.witness, pattern));
      REMH_ENSURE(r.witness.edge_count() == r.ex);
      json result;
      result["rem"] = r.rem;
      result["ex"] = r.ex;
      result["witness"] = to_graph6(r.witness);
      result["deleted_edges"] = edges_json(deleted_edges_of(g, r.witness));
      result["branch_trace"] = r.branch_trace;
      report["result"] = std::move(result);
      report["counters"] = {{"candidates", r.candidates}};
      emit(report, start);
      return 0;
    }
    if (method != "oracle") throw UsageError("unknown --method: " + method);

    if (budget < 0 && !yes_exponential &&
        g.edge_count() > kExponentialGateEdges)
      throw UsageError(
          "the oracle is exponential and the host has more than " +
          std::to_string(kExponentialGateEdges) +
          " edges; pass --budget or --yes-exponential to proceed");

    OracleOptions options;
    if (budget >= 0) options.budget = static_cast<int>(budget);
    OracleResult r = rem_exact(g, pattern, options);
    if (!r.solved) {
      json result;
      result["solved"] = false;
      result["exceeded_budget"] = r.exceeded_budget;
      report["result"] = std::move(result);
      report["counters"] = {{"nodes", r.nodes}};
      emit(report, start);
      std::cerr << "budget " << r.exceeded_budget
                << " exceeded before a certificate was found\n";
      return 1;
    }
    REMH_ENSURE(!has_subgraph(r.witness, pattern));
    REMH_ENSURE(r.witness.edge_count() == r.ex);
    json result;
    result["solved"] = true;
    result["rem"] = r.rem;
    result["ex"] = r.ex;
    result["witness"] = to_graph6(r.witness);
    result["deleted_edges"] = edges_json(r.deleted_edges);
    report["result"] = std::move(result);
    report["counters"] = {{"nodes", r.nodes}};
    emit(report, start);
    return 0;
  } catch (const InfeasibleError& e) {
    report["error"] = {{"type", "infeasible"}, {"message", e.what()}};
    emit(report, start);
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  }
}

int run_matching(const std::vector<std::string>& argv,
                 const std::string& graph_path,
                 const std::string& format_flag) {
  Clock::time_point start = Clock::now();
  Graph g = load_graph(graph_path, format_flag);
  Matching m = max_matching(g);
  std::vector<int> covered(g.vertex_count(), 0);
  for (auto [u, v] : m.edges) {
    REMH_ENSURE(g.has_edge(u, v));
    REMH_ENSURE(!covered[u] && !covered[v]);
    covered[u] = covered[v] = 1;
  }
  json report = report_skeleton("matching", argv);
  report["inputs"] = {{"graph", graph_json(g)}};
  report["method"] = "blossom";
  report["result"] = {{"size", m.size()},
                      {"edges", edges_json(m.edges)},
                      {"mate", m.mate}};
  emit(report, start);
  return 0;
}

DegreeBudget budget_from_file(const Graph& g, const std::string& path) {
  std::istringstream in(read_source(path));
  std::vector<int> caps(g.vertex_count(), -1);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    int v, value;
    if (!(ls >> v)) continue;  // blank line
    if (!(ls >> value))
      throw UsageError("budget file line " + std::to_string(lineno) +
                       ": expected \"vertex value\"");
    std::string extra;
    if (ls >> extra)
      throw UsageError("budget file line " + std::to_string(lineno) +
                       ": trailing token '" + extra + "'");
    if (v < 0 || v >= g.vertex_count())
      throw UsageError("budget file line " + std::to_string(lineno) +
                       ": vertex " + std::to_string(v) + " out of range");
    if (caps[v] != -1)
      throw UsageError("budget file line " + std::to_string(lineno) +
                       ": vertex " + std::to_string(v) + " repeated");
    if (value < 0)
      throw UsageError("budget file line " + std::to_string(lineno) +
                       ": negative cap");
    caps[v] = value;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (caps[v] == -1)
      throw UsageError("budget file: no cap for vertex " + std::to_string(v));
  return DegreeBudget{caps};
}

int run_factor(const std::vector<std::string>& argv,
               const std::string& graph_path, const std::string& format_flag,
               const std::string& f_path, long long f_const) {
  Clock::time_point start = Clock::now();
  Graph g = load_graph(graph_path, format_flag);
  if (f_path.empty() == (f_const < 0))
    throw UsageError("exactly one of --f FILE or --f-const K is required");
  DegreeBudget budget =
      f_path.empty()
          ? DegreeBudget::uniform(g.vertex_count(), static_cast<int>(f_const))
          : budget_from_file(g, f_path);
  FactorResult r = max_degree_constrained_subgraph(g, budget);
  DegreeBudget clamped = budget.clamped(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    REMH_ENSURE(r.subgraph.degree(v) <= clamped.caps[v]);
  REMH_ENSURE(r.matching_size == r.m + r.slack_total);
  json report = report_skeleton("factor", argv);
  report["inputs"] = {{"graph", graph_json(g)}};
  report["method"] = "factor";
  report["result"] = {{"m", r.m},
                      {"edges", edges_json(r.edges)},
                      {"subgraph", to_graph6(r.subgraph)},
                      {"caps", budget.caps}};
  report["counters"] = {{"matching_size", r.matching_size},
                        {"slack_total", r.slack_total}};
  emit(report, start);
  return 0;
}

json identity_json(const IdentityReport& r) {
  return json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
}

int run_reduce_pendant(const std::vector<std::string>& argv,
                       const std::string& graph_path,
                       const std::string& tree_path,
                       const std::string& format_flag, bool validate) {
  Clock::time_point start = Clock::now();
  Graph g = load_graph(graph_path, format_flag);
  TreeSpec tree = classify_tree(load_graph(tree_path, format_flag));
  PendantInstance inst = pendant_expand(g, tree);
  json report = report_skeleton("reduce pendant", argv);
  report["inputs"] = {{"graph", graph_json(g)},
                      {"tree", graph_json(tree.tree)}};
  report["method"] = "pendant-expansion";
  json result;
  result["constructed"] = graph_json(inst.constructed);
  result["leaves_per_vertex"] = inst.leaves_per_vertex;
  result["stripped_tree"] = to_graph6(inst.stripped.tree);
  if (validate) result["validation"] = identity_json(validate_pendant(inst));
  report["result"] = std::move(result);
  emit(report, start);
  return 0;
}

int run_reduce_pad(const std::vector<std::string>& argv,
                   const std::string& graph_path,
                   const std::string& pattern_path,
                   const std::string& format_flag, bool validate) {
  Clock::time_point start = Clock::now();
  Graph g = load_graph(graph_path, format_flag);
  Graph pattern = load_graph(pattern_path, format_flag);
  PadInstance inst = disjoint_pad(g, pattern);
  json report = report_skeleton("reduce pad", argv);
  report["inputs"] = {{"graph", graph_json(g)},
                      {"pattern", graph_json(pattern)}};
  report["method"] = "disjoint-padding";
  json result;
  result["constructed"] = graph_json(inst.constructed);
  result["selected_component"] = to_graph6(inst.selected_component);
  result["multiplicity"] = inst.multiplicity;
  result["copies_per_component"] = inst.copies_per_component;
  result["reduced_pattern"] = to_graph6(inst.reduced_pattern);
  if (validate) result["validation"] = identity_json(validate_pad(inst));
  report["result"] = std::move(result);
  emit(report, start);
  return 0;
}

int run_check_biclique(const std::vector<std::string>& argv,
                       const std::string& graph_path,
                       const std::string& format_flag) {
  Clock::time_point start = Clock::now();
  Graph g = load_graph(graph_path, format_flag);
  bool contains = contains_balanced_biclique(g);
  json report = report_skeleton("check biclique", argv);
  report["inputs"] = {{"graph", graph_json(g)}};
  report["method"] = "complement-components";
  report["result"] = {{"n", g.vertex_count()},
                      {"a", g.vertex_count() / 2},
                      {"b", g.vertex_count() - g.vertex_count() / 2},
                      {"contains", contains}};
  emit(report, start);
  return 0;
}

int run_check_clique_factor(const std::vector<std::string>& argv,
                            const std::string& graph_path,
                            const std::string& format_flag, int q) {
  Clock::time_point start = Clock::now();
  Graph g = load_graph(graph_path, format_flag);
  bool has = has_clique_factor(g, q);
  json report = report_skeleton("check clique-factor", argv);
  report["inputs"] = {{"graph", graph_json(g)}};
  report["method"] = "backtracking";
  report["result"] = {{"q", q}, {"has_factor", has}};
  emit(report, start);
  return 0;
}

int run_verify_sesc(const std::vector<std::string>& argv,
                    const std::string& tree_path,
                    const std::string& format_flag, int n, int jobs) {
  Clock::time_point start = Clock::now();
  TreeSpec tree = classify_tree(load_graph(tree_path, format_flag));
  SescOptions options;
  options.jobs = jobs;
  SescVerdict v = verify_sesc(tree, n, options);
  json report = report_skeleton("verify-sesc", argv);
  report["inputs"] = {{"tree", graph_json(tree.tree)}};
  report["method"] = "isomorph-free-generation";
  report["result"] = {{"k", v.k},
                      {"n", v.n},
                      {"holds", v.holds},
                      {"tree_free_count", v.tree_free_count},
                      {"extremal", v.extremal},
                      {"counterexamples", v.counterexamples}};
  report["counters"] = {{"candidates", v.candidates}};
  emit(report, start);
  return 0;
}

int run_gen_trees(const std::vector<std::string>& argv, int k,
                  int max_diameter, bool non_star) {
  Clock::time_point start = Clock::now();
  if (k < 1) throw UsageError("--k must be at least 1");
  json trees = json::array();
  for (const Graph& t : generate_trees(k)) {
    TreeSpec spec = classify_tree(t);
    if (max_diameter >= 0 && spec.diameter > max_diameter) continue;
    if (non_star && spec.is_star) continue;
    trees.push_back(to_graph6(t));
  }
  json report = report_skeleton("gen-trees", argv);
  report["inputs"] = {{"k", k},
                      {"max_diameter", max_diameter},
                      {"non_star", non_star}};
  report["method"] = "tree-generation";
  report["result"] = {{"count", trees.size()}, {"trees", trees}};
  emit(report, start);
  return 0;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

int run_bench(const std::vector<std::string>& argv, int repeat) {
  Clock::time_point start = Clock::now();
  if (repeat < 1) throw UsageError("--repeat must be at least 1");
  json entries = json::array();
  auto timed = [&](const std::string& name,
                   const std::function<long long()>& body) {
    long long value = 0;
    double best = -1;
    for (int i = 0; i < repeat; ++i) {
      Clock::time_point t0 = Clock::now();
      value = body();
      double ms = ms_since(t0);
      if (best < 0 || ms < best) best = ms;
    }
    entries.push_back(
        {{"name", name}, {"value", value}, {"best_ms", best}});
  };
  timed("matching/petersen",
        [] { return static_cast<long long>(max_matching(petersen_graph()).size()); });
  timed("factor/k6-cap2", [] {
    return max_degree_constrained_subgraph(complete_graph(6),
                                           DegreeBudget::uniform(6, 2))
        .m;
  });
  timed("starforest/k6-2k2", [] {
    return ex_star_forest(complete_graph(6), StarForestSpec({1, 1})).ex;
  });
  timed("oracle/k4-p4",
        [] { return static_cast<long long>(rem_exact(complete_graph(4), path_graph(4)).rem); });
  timed("biclique/k33", [] {
    return static_cast<long long>(contains_balanced_biclique(complete_bipartite(3, 3)));
  });
  timed("generate/n6", [] {
    long long count = 0;
    generate_graphs(6, {}, [&](const Graph&) { ++count; });
    return count;
  });
  json report = report_skeleton("bench", argv);
  report["inputs"] = {{"repeat", repeat}};
  report["method"] = "bench";
  report["result"] = {{"entries", entries}};
  emit(report, start);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> argv_echo(argv, argv + argc);

  CLI::App app{
      "remh: minimum edge deletions to an H-free graph, with exact and "
      "polynomial engines, hardness-reduction constructors and extremal "
      "verification"};
  app.require_subcommand(1);

  std::string graph_path, pattern_path, tree_path;
  std::string format_flag = "auto";
  std::string method = "auto";
  long long budget = -1;
  bool yes_exponential = false;
  std::string f_path;
  long long f_const = -1;
  bool validate = false;
  int n = 0, jobs = 1, k = 0, max_diameter = -1, q = 0, repeat = 1;
  bool non_star = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_flag,
                    "input format: auto|g6|edges (default auto)");
  };
  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_path, "host graph file, or - for stdin")
        ->required();
  };

  for (const char* name : {"rem", "ex"}) {
    CLI::App* cmd = app.add_subcommand(
        name, std::string(name) == std::string("rem")
                  ? "minimum edge deletions making the host pattern-free"
                  : "maximum pattern-free subgraph size");
    add_graph(cmd);
    cmd->add_option("--pattern", pattern_path, "pattern graph file")
        ->required();
    cmd->add_option("--method", method, "auto|starforest|oracle");
    cmd->add_option("--budget", budget, "oracle deletion budget");
    cmd->add_flag("--yes-exponential", yes_exponential,
                  "allow the exponential oracle on large inputs");
    add_format(cmd);
  }

  CLI::App* matching_cmd =
      app.add_subcommand("matching", "maximum matching (blossom)");
  add_graph(matching_cmd);
  add_format(matching_cmd);

  CLI::App* factor_cmd = app.add_subcommand(
      "factor", "maximum degree-constrained subgraph");
  add_graph(factor_cmd);
  factor_cmd->add_option("--f", f_path,
                         "per-vertex caps file (\"vertex value\" lines)");
  factor_cmd->add_option("--f-const", f_const, "uniform degree cap");
  add_format(factor_cmd);

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "hardness-reduction constructors");
  reduce_cmd->require_subcommand(1);
  CLI::App* pendant_cmd = reduce_cmd->add_subcommand(
      "pendant", "pendant expansion for a tree pattern");
  add_graph(pendant_cmd);
  pendant_cmd->add_option("--tree", tree_path, "tree pattern file")
      ->required();
  pendant_cmd->add_flag("--validate", validate,
                        "check the identity with the exact oracle");
  add_format(pendant_cmd);
  CLI::App* pad_cmd = reduce_cmd->add_subcommand(
      "pad", "disjoint padding for a forest pattern");
  add_graph(pad_cmd);
  pad_cmd->add_option("--pattern", pattern_path, "forest pattern file")
      ->required();
  pad_cmd->add_flag("--validate", validate,
                    "check the identity with the exact oracle");
  add_format(pad_cmd);

  CLI::App* check_cmd = app.add_subcommand("check", "decision procedures");
  check_cmd->require_subcommand(1);
  CLI::App* biclique_cmd = check_cmd->add_subcommand(
      "biclique", "balanced complete bipartite subgraph");
  add_graph(biclique_cmd);
  add_format(biclique_cmd);
  CLI::App* clique_factor_cmd =
      check_cmd->add_subcommand("clique-factor", "partition into q-cliques");
  add_graph(clique_factor_cmd);
  clique_factor_cmd->add_option("--q", q, "clique size")->required();
  add_format(clique_factor_cmd);

  CLI::App* sesc_cmd = app.add_subcommand(
      "verify-sesc", "verify the strong extremal characterization at size n");
  sesc_cmd->add_option("--tree", tree_path, "tree file")->required();
  sesc_cmd->add_option("--n", n, "host vertex count")->required();
  sesc_cmd->add_option("--jobs", jobs, "worker threads");
  add_format(sesc_cmd);

  CLI::App* gen_cmd =
      app.add_subcommand("gen-trees", "enumerate trees on k vertices");
  gen_cmd->add_option("--k", k, "vertex count")->required();
  gen_cmd->add_option("--max-diameter", max_diameter, "keep diameter <= D");
  gen_cmd->add_flag("--non-star", non_star, "drop stars");

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time representative kernels");
  bench_cmd->add_option("--repeat", repeat, "repetitions, best time wins");

  try {
    app.parse(argc, argv);

    if (app.got_subcommand("rem") || app.got_subcommand("ex")) {
      const char* name = app.got_subcommand("rem") ? "rem" : "ex";
      return run_rem_ex(name, argv_echo, graph_path, pattern_path, format_flag,
                        method, budget, yes_exponential);
    }
    if (app.got_subcommand("matching"))
      return run_matching(argv_echo, graph_path, format_flag);
    if (app.got_subcommand("factor"))
      return run_factor(argv_echo, graph_path, format_flag, f_path, f_const);
    if (app.got_subcommand("reduce")) {
      if (reduce_cmd->got_subcommand("pendant"))
        return run_reduce_pendant(argv_echo, graph_path, tree_path,
                                  format_flag, validate);
      return run_reduce_pad(argv_echo, graph_path, pattern_path, format_flag,
                            validate);
    }
    if (app.got_subcommand("check")) {
      if (check_cmd->got_subcommand("biclique"))
        return run_check_biclique(argv_echo, graph_path, format_flag);
      return run_check_clique_factor(argv_echo, graph_path, format_flag, q);
    }
    if (app.got_subcommand("verify-sesc"))
      return run_verify_sesc(argv_echo, tree_path, format_flag, n, jobs);
    if (app.got_subcommand("gen-trees"))
      return run_gen_trees(argv_echo, k, max_diameter, non_star);
    if (app.got_subcommand("bench")) return run_bench(argv_echo, repeat);
    throw UsageError("no subcommand dispatched");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const remh::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
