#include <algorithm>

#include "doctest.h"
#include "edgedepth/graph.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace edgedepth;
using fixtures::labels;

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), GraphError);
  CHECK_NOTHROW(Graph::with_isolated(3, {{0, 1}}));
}

TEST_CASE("induced subgraphs") {
  auto tri = induced_subgraph(fixtures::tail4(), labels({1, 2, 3}));
  CHECK(tri.graph == fixtures::triangle());
  auto g = fixtures::c5();
  CHECK(induced_subgraph(g, g.vertices()).graph == g);
  auto sub = induced_subgraph(g, labels({1, 2, 4}));
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.graph.adjacent(0, 1));
  CHECK(sub.graph.degree(2) == 0);
  CHECK(sub.vertices == std::vector<int>{0, 1, 3});
  CHECK_THROWS_AS(induced_subgraph(g, VertexSet()), GraphError);
}

TEST_CASE("bipartiteness with odd cycle witness") {
  auto r = is_bipartite(fixtures::c5());
  CHECK_FALSE(r.bipartite);
  CHECK(r.odd_cycle.size() == 5);
  CHECK(is_bipartite(fixtures::k2()).bipartite);
  auto f3 = is_bipartite(fixtures::triangle_fork());
  CHECK_FALSE(f3.bipartite);
  CHECK(f3.odd_cycle.size() % 2 == 1);
}

TEST_CASE("strong non-bipartiteness") {
  CHECK(is_strongly_non_bipartite(fixtures::triangle()));
  auto tri_edge = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  CHECK_FALSE(is_strongly_non_bipartite(tri_edge));
  auto two_tri = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(is_strongly_non_bipartite(two_tri));
}

TEST_CASE("dominating sets and neighborhoods") {
  auto g = fixtures::tail4();
  CHECK_FALSE(is_dominating(g, labels({1, 2, 3})));
  CHECK(is_dominating(g, g.vertices()));
  CHECK(is_dominating(g, labels({1, 2, 3, 4, 5, 6})));
  CHECK(closed_neighborhood(fixtures::cone_pendant(), 3) == fixtures::cone_pendant().vertices());
  CHECK(closed_neighborhood(fixtures::k2(), 0) == labels({1, 2}));
  CHECK(closed_neighborhood(fixtures::c5(), 0) == labels({5, 1, 2}));
  CHECK(neighborhood(fixtures::c5(), 0) == labels({5, 2}));
}

TEST_CASE("maximal independent sets") {
  CHECK(maximal_independent_sets(fixtures::triangle()) ==
        std::vector<VertexSet>{labels({1}), labels({2}), labels({3})});
  auto c5 = maximal_independent_sets(fixtures::c5());
  CHECK(c5 == std::vector<VertexSet>{labels({1, 3}), labels({1, 4}), labels({2, 4}),
                                     labels({2, 5}), labels({3, 5})});
  CHECK(maximal_independent_sets(fixtures::k2()).size() == 2);
}

TEST_CASE("disjoint connected maximal independent pair") {
  auto k2 = disjoint_connected_mis_pair(fixtures::k2());
  REQUIRE(k2);
  CHECK(k2->first == labels({1}));
  CHECK(k2->second == labels({2}));
  auto c5 = disjoint_connected_mis_pair(fixtures::c5());
  REQUIRE(c5);
  CHECK(c5->first.size() + c5->second.size() == 4);
  CHECK_FALSE(c5->first.intersects(c5->second));
  CHECK(is_connected(fixtures::c5(), c5->first | c5->second));
  auto tri = disjoint_connected_mis_pair(fixtures::triangle());
  REQUIRE(tri);
  CHECK(tri->first == labels({1}));
  CHECK(tri->second == labels({2}));
}

TEST_CASE("complement diameter") {
  CHECK(complement_diameter(fixtures::c5()) == Diameter::finite(2));
  CHECK(complement_diameter(fixtures::triangle()).is_infinite());
  CHECK(complement_diameter(fixtures::k2()).is_infinite());
  CHECK(Diameter::infinite() > Diameter::finite(100));
  CHECK(Diameter::infinite().at_least(3));
  CHECK(Diameter::infinite().to_string() == "INFINITE");
}

TEST_CASE("odd cycles") {
  CHECK(odd_cycles(fixtures::triangle()).size() == 1);
  auto f1 = odd_cycles(fixtures::tail4());
  REQUIRE(f1.size() == 1);
  CHECK(VertexSet::from_vertices(f1[0]) == labels({1, 2, 3}));
  CHECK_FALSE(is_dominating_cycle(fixtures::tail4(), f1[0]));
  auto c5 = odd_cycles(fixtures::c5());
  REQUIRE(c5.size() == 1);
  CHECK(is_dominating_cycle(fixtures::c5(), c5[0]));
  CHECK(odd_cycles(named::complete(4)).size() == 4);
  CHECK(odd_cycles(named::complete(5)).size() == 10 + 12);
}

TEST_CASE("graph predicates agree with brute force on all small connected graphs") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : brute::connected_graphs(n)) {
      CAPTURE(n);
      auto mis = maximal_independent_sets(g);
      auto ref = brute::maximal_independent(g);
      std::vector<brute::Mask> got;
      for (auto f : mis) got.push_back(f.bits());
      std::sort(got.begin(), got.end());
      CHECK(got == ref);
      for (auto f : mis) {
        for (int v = 0; v < n; ++v) {
          if (!f.contains(v)) {
            VertexSet bigger = f;
            bigger.insert(v);
            CHECK_FALSE(is_independent(g, bigger));
          }
        }
      }
      for (int v = 0; v < n; ++v) {
        CHECK(closed_neighborhood(g, v).size() == g.degree(v) + 1);
      }
      bool bip = is_bipartite(g).bipartite;
      CHECK(bip == brute::two_colorable(g, g.vertices().bits()));
      CHECK(bip == odd_cycles(g).empty());
      auto flags = odd_cycle_vertex_sets(g);
      for (const auto& c : odd_cycles(g)) CHECK(flags[VertexSet::from_vertices(c).bits()]);
      for (std::uint32_t u = 1; u < (1u << n); ++u) {
        CHECK(is_dominating(g, VertexSet(u)) == brute::dominating(g, u));
      }
      // complement disconnected iff V splits into fully joined parts
      bool join = false;
      for (std::uint32_t a = 1; a + 1 < (1u << n) && !join; ++a) {
        bool all = true;
        for (int i = 0; i < n && all; ++i) {
          for (int j = 0; j < n && all; ++j) {
            if ((a >> i & 1) && !(a >> j & 1) && !g.adjacent(i, j)) all = false;
          }
        }
        join = all;
      }
      CHECK(complement_diameter(g).is_infinite() == join);
    }
  }
}

TEST_CASE("brute catalog has the known counts") {
  CHECK(brute::connected_graphs(2).size() == 1);
  CHECK(brute::connected_graphs(3).size() == 2);
  CHECK(brute::connected_graphs(4).size() == 6);
  CHECK(brute::connected_graphs(5).size() == 21);
  CHECK(brute::connected_graphs(6).size() == 112);
}
