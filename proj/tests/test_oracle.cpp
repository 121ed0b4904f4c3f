#include <vector>

#include "doctest.h"
#include "remh/canonical.hpp"
#include "remh/errors.hpp"
#include "remh/generate.hpp"
#include "remh/graph.hpp"
#include "remh/oracle.hpp"
#include "remh/subgraph.hpp"
#include "test_util.hpp"

using namespace remh;

namespace {

void check_certificate(const Graph& host, const Graph& pattern,
                       const OracleResult& r) {
  REQUIRE(r.solved);
  CHECK(r.rem + r.ex == host.edge_count());
  CHECK(static_cast<long long>(r.deleted_edges.size()) == r.rem);
  CHECK(r.witness.edge_count() == r.ex);
  CHECK_FALSE(has_subgraph(r.witness, pattern));
  Graph rebuilt = host;
  for (auto [u, v] : r.deleted_edges) {
    REQUIRE(host.has_edge(u, v));
    rebuilt.remove_edge(u, v);
  }
  CHECK(rebuilt == r.witness);
}

}  // namespace

TEST_CASE("frozen values") {
  Graph p4 = path_graph(4);
  CHECK(rem_exact(complete_graph(3), p4).rem == 0);
  CHECK(rem_exact(disjoint_copies(complete_graph(3), 2), p4).rem == 0);
  CHECK(rem_exact(complete_graph(4), p4).rem == 3);
  CHECK(rem_exact(cycle_graph(5), p4).rem == 2);
  CHECK(ex_exact(complete_graph(3), complete_graph(2)) == 0);
  CHECK(ex_exact(disjoint_copies(complete_graph(3), 2),
                 disjoint_copies(complete_graph(2), 2)) == 3);

  OracleResult k4 = rem_exact(complete_graph(4), star_graph(3));
  CHECK(k4.rem == 2);
  CHECK(is_isomorphic(k4.witness, cycle_graph(4)));
  check_certificate(complete_graph(4), star_graph(3), k4);

  OracleResult pet = rem_exact(testutil::petersen(), star_graph(3));
  CHECK(pet.rem == 5);
  check_certificate(testutil::petersen(), star_graph(3), pet);
}

TEST_CASE("edgeless patterns") {
  // Two isolated vertices fit K3 no matter what is deleted.
  CHECK_THROWS_AS(rem_exact(complete_graph(3), empty_graph(2)),
                  InfeasibleError);
  CHECK_THROWS_AS(rem_exact(Graph(0), Graph(0)), InfeasibleError);
  // An edgeless pattern larger than the host never fits: nothing to do.
  OracleResult r = rem_exact(complete_graph(3), empty_graph(4));
  CHECK(r.rem == 0);
  CHECK(r.ex == 3);
}

TEST_CASE("budget cutoff reports honestly") {
  OracleOptions options;
  options.budget = 2;
  OracleResult r = rem_exact(complete_graph(4), path_graph(4), options);
  CHECK_FALSE(r.solved);
  CHECK(r.exceeded_budget == 2);

  options.budget = 3;
  OracleResult ok = rem_exact(complete_graph(4), path_graph(4), options);
  CHECK(ok.solved);
  CHECK(ok.rem == 3);
  CHECK(ok.exceeded_budget == -1);
}

TEST_CASE("node ceiling") {
  OracleOptions options;
  options.node_ceiling = 1;
  CHECK_THROWS_AS(rem_exact(testutil::petersen(), star_graph(3), options),
                  ResourceLimitError);
  OracleResult r = rem_exact(complete_graph(4), path_graph(4));
  CHECK(r.nodes > 0);
}

TEST_CASE("agrees with brute force over all small host/pattern pairs") {
  std::vector<Graph> patterns;
  for (int k = 2; k <= 4; ++k)
    generate_graphs(k, {}, [&](const Graph& h) {
      if (h.edge_count() > 0) patterns.push_back(h);
    });
  REQUIRE(patterns.size() == 14);
  for (int n = 1; n <= 5; ++n) {
    generate_graphs(n, {}, [&](const Graph& g) {
      for (const Graph& h : patterns) {
        OracleResult r = rem_exact(g, h);
        check_certificate(g, h, r);
        CHECK(r.rem == testutil::brute_rem(g, h));
      }
    });
  }
}

TEST_CASE("deterministic output") {
  Graph host = complete_graph(5);
  Graph pattern = path_graph(4);
  OracleResult a = rem_exact(host, pattern);
  OracleResult b = rem_exact(host, pattern);
  CHECK(a.rem == b.rem);
  CHECK(a.deleted_edges == b.deleted_edges);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes == b.nodes);
}
