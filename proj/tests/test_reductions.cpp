#include <vector>

#include "doctest.h"
#include "remh/canonical.hpp"
#include "remh/errors.hpp"
#include "remh/generate.hpp"
#include "remh/graph.hpp"
#include "remh/reductions.hpp"
#include "remh/subgraph.hpp"
#include "remh/trees.hpp"
#include "test_util.hpp"

using namespace remh;

TEST_CASE("pendant expansion structure") {
  PendantInstance inst = pendant_expand(complete_graph(3),
                                        classify_tree(path_graph(6)));
  CHECK(inst.leaves_per_vertex == 9);  // C(3,2) + 6
  CHECK(inst.constructed.vertex_count() == 30);
  CHECK(inst.constructed.edge_count() == 3 + 27);
  CHECK(is_isomorphic(inst.stripped.tree, path_graph(4)));
  REQUIRE(inst.leaf_ranges.size() == 3);
  for (int v = 0; v < 3; ++v) {
    auto [begin, end] = inst.leaf_ranges[v];
    CHECK(end - begin == 9);
    for (int leaf = begin; leaf < end; ++leaf) {
      CHECK(inst.constructed.degree(leaf) == 1);
      CHECK(inst.constructed.has_edge(v, leaf));
    }
  }
}

TEST_CASE("pendant expansion identity") {
  PendantInstance a = pendant_expand(complete_graph(3),
                                     classify_tree(path_graph(6)));
  IdentityReport ra = validate_pendant(a);
  CHECK(ra.holds);
  CHECK(ra.lhs == 0);
  CHECK(ra.rhs == 0);

  PendantInstance b = pendant_expand(complete_graph(4),
                                     classify_tree(path_graph(6)));
  CHECK(b.leaves_per_vertex == 12);  // C(4,2) + 6
  CHECK(b.constructed.vertex_count() == 52);
  IdentityReport rb = validate_pendant(b);
  CHECK(rb.holds);
  CHECK(rb.lhs == 3);
  CHECK(rb.rhs == 3);
}

TEST_CASE("pendant expansion requires diameter at least five") {
  CHECK_THROWS_AS(pendant_expand(complete_graph(3),
                                 classify_tree(path_graph(5))),
                  PreconditionError);
  CHECK_THROWS_AS(pendant_expand(complete_graph(3),
                                 classify_tree(star_graph(3))),
                  PreconditionError);
}

TEST_CASE("disjoint padding structure") {
  Graph pattern = Graph::disjoint_union(path_graph(4), complete_graph(2));
  PadInstance inst = disjoint_pad(complete_graph(3), pattern);
  CHECK(is_isomorphic(inst.selected_component, path_graph(4)));
  CHECK(inst.multiplicity == 1);
  CHECK(is_isomorphic(inst.reduced_pattern, path_graph(4)));
  CHECK(inst.copies_per_component == 9);  // n^2
  CHECK(inst.constructed.vertex_count() == 21);
  CHECK(inst.constructed.edge_count() == 12);
  IdentityReport r = validate_pad(inst);
  CHECK(r.holds);
  CHECK(r.lhs == 12);
  CHECK(r.rhs == 12);
}

TEST_CASE("disjoint padding with a positive remainder") {
  Graph pattern = Graph::disjoint_union(path_graph(4), star_graph(2));
  PadInstance inst = disjoint_pad(complete_graph(4), pattern);
  CHECK(inst.copies_per_component == 16);
  CHECK(inst.constructed.vertex_count() == 52);
  CHECK(inst.constructed.edge_count() == 38);
  IdentityReport r = validate_pad(inst);
  CHECK(r.holds);
  CHECK(r.lhs == 35);
  CHECK(r.rhs == 35);
}

TEST_CASE("padding a pattern whose components all match the selection") {
  Graph pattern = disjoint_copies(path_graph(4), 2);
  PadInstance inst = disjoint_pad(complete_graph(3), pattern);
  CHECK(inst.multiplicity == 2);
  CHECK(inst.constructed == complete_graph(3));
  CHECK(is_isomorphic(inst.reduced_pattern, pattern));
  IdentityReport r = validate_pad(inst);
  CHECK(r.holds);
}

TEST_CASE("padding preconditions") {
  CHECK_THROWS_AS(disjoint_pad(complete_graph(3), cycle_graph(4)),
                  PreconditionError);
  // A star forest has no non-star component to select.
  Graph stars = Graph::disjoint_union(star_graph(2), complete_graph(2));
  CHECK_THROWS_AS(disjoint_pad(complete_graph(3), stars), PreconditionError);
}

TEST_CASE("union identity") {
  UnionIdentityReport a =
      verify_union_identity(complete_graph(3), complete_graph(2), 2);
  CHECK(a.holds);
  CHECK(a.lhs == 3);
  CHECK(a.rhs_first == 3);
  CHECK(a.rhs_second == 0);

  UnionIdentityReport b =
      verify_union_identity(complete_graph(2), complete_graph(2), 2);
  CHECK(b.holds);
  CHECK(b.lhs == 1);

  UnionIdentityReport c = verify_union_identity(path_graph(3), path_graph(3), 2);
  CHECK(c.holds);
  CHECK(c.lhs == 3);
  CHECK(c.rhs_first == 2);
  CHECK(c.rhs_second == 1);
}

TEST_CASE("union identity preconditions") {
  CHECK_THROWS_AS(verify_union_identity(complete_graph(3), complete_graph(2), 1),
                  PreconditionError);
  CHECK_THROWS_AS(verify_union_identity(complete_graph(3), empty_graph(1), 2),
                  PreconditionError);
  CHECK_THROWS_AS(
      verify_union_identity(complete_graph(3),
                            disjoint_copies(complete_graph(2), 2), 2),
      PreconditionError);
}

TEST_CASE("clique factors") {
  CHECK(has_clique_factor(disjoint_copies(complete_graph(3), 2), 3));
  CHECK(has_clique_factor(complete_graph(6), 3));
  CHECK_FALSE(has_clique_factor(cycle_graph(6), 3));
  CHECK_FALSE(has_clique_factor(complete_bipartite(3, 3), 3));
  CHECK(has_clique_factor(path_graph(4), 2));
  CHECK_FALSE(has_clique_factor(star_graph(3), 2));
  CHECK(has_clique_factor(complete_graph(4), 4));
  CHECK_FALSE(has_clique_factor(cycle_graph(4), 4));
  CHECK(has_clique_factor(empty_graph(3), 1));
  CHECK_THROWS_AS(has_clique_factor(complete_graph(4), 3), PreconditionError);
  CHECK_THROWS_AS(has_clique_factor(complete_graph(4), 0), PreconditionError);
}

TEST_CASE("balanced biclique frozen cases") {
  CHECK(contains_balanced_biclique(complete_bipartite(3, 3)));
  Graph k6_minus_pm = complete_graph(6);
  k6_minus_pm.remove_edge(0, 1);
  k6_minus_pm.remove_edge(2, 3);
  k6_minus_pm.remove_edge(4, 5);
  CHECK_FALSE(contains_balanced_biclique(k6_minus_pm));
  CHECK_FALSE(contains_balanced_biclique(cycle_graph(6)));
  CHECK(contains_balanced_biclique(complete_graph(4)));
  CHECK_FALSE(contains_balanced_biclique(path_graph(4)));
  CHECK(contains_balanced_biclique(complete_graph(5)));
  CHECK_FALSE(contains_balanced_biclique(cycle_graph(5)));
  CHECK(contains_balanced_biclique(Graph(0)));
  CHECK(contains_balanced_biclique(empty_graph(1)));
  CHECK(contains_balanced_biclique(complete_graph(2)));
  CHECK_FALSE(contains_balanced_biclique(empty_graph(2)));
}

TEST_CASE("balanced biclique agrees with brute force on all small graphs") {
  for (int n = 1; n <= 6; ++n) {
    generate_graphs(n, {}, [&](const Graph& g) {
      CHECK(contains_balanced_biclique(g) ==
            testutil::brute_balanced_biclique(g));
    });
  }
}
