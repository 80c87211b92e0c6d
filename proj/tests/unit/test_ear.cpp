#include <set>

#include "doctest.h"
#include "edgedepth/ear.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace edgedepth;
using fixtures::labels;

TEST_CASE("phi star on odd cycles and the triangle with a tail") {
  for (int r = 1; r <= 4; ++r) CHECK(phi_star(named::cycle(2 * r + 1)).value == 0);
  CHECK(phi_star(fixtures::triangle()).value == 0);
  CHECK(phi_star(fixtures::tail4()).value == 4);
  CHECK_THROWS_AS(phi_star(fixtures::k2()), GraphError);
}

TEST_CASE("mu star") {
  CHECK(mu_star(fixtures::c5()) == 2);
  CHECK(mu_star(fixtures::tail4()) == 5);
  auto two_tri = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(mu_star(two_tri) == 2);
  for (int r = 1; r <= 4; ++r) CHECK(mu_star(named::cycle(2 * r + 1)) == r);
}

TEST_CASE("s invariant") {
  auto f1 = s_invariant(fixtures::tail4());
  CHECK(f1.value == 4);
  CHECK(is_dominating(fixtures::tail4(), f1.witness));
  CHECK(s_invariant(fixtures::c5()).value == 2);
  CHECK(s_invariant(fixtures::c5()).witness == fixtures::c5().vertices());
  CHECK(s_invariant(fixtures::triangle()).value == 1);
  CHECK_THROWS_AS(s_invariant(fixtures::k2()), GraphError);
  for (int s = 1; s <= 5; ++s) CHECK(s_invariant(named::triangle_with_tail(s)).value == s);
}

TEST_CASE("mu star extension bound") {
  CHECK(mu_star_extension_bound_check(fixtures::tail4(), labels({1, 2, 3}), 3));
  CHECK(mu_star_extension_bound_check(fixtures::cone_pendant(), labels({1, 2, 3}), 3));
  CHECK_THROWS_AS(mu_star_extension_bound_check(fixtures::triangle(), labels({1, 2, 3}), 0),
                  GraphError);
  CHECK_THROWS_AS(mu_star_extension_bound_check(fixtures::tail4(), labels({1, 2, 3}), 5),
                  GraphError);
  EarSolver solver(fixtures::tail4());
  CHECK(solver.mu_star_on(labels({1, 2, 3})) == 1);
  CHECK(solver.mu_star_on(labels({1, 2, 3, 4})) == 2);
}

TEST_CASE("ear decomposition validator") {
  auto g = fixtures::tail4();
  EarDecomposition ok;
  ok.walks.push_back({{0, 1, 2, 0}, WalkKind::Closed});
  ok.walks.push_back({{2, 3, 2}, WalkKind::Closed});
  ok.walks.push_back({{3, 4, 3}, WalkKind::Closed});
  ok.walks.push_back({{4, 5, 4}, WalkKind::Closed});
  ok.walks.push_back({{5, 6, 5}, WalkKind::Closed});
  ok.even_walk_count = 4;
  ok.covered = g.vertices();
  CHECK_FALSE(validate_ear_decomposition(g, g.vertices(), ok));

  auto bad_start = ok;
  bad_start.walks[0] = {{2, 3, 2}, WalkKind::Closed};
  CHECK(validate_ear_decomposition(g, g.vertices(), bad_start));
  auto bad_count = ok;
  bad_count.even_walk_count = 3;
  CHECK(validate_ear_decomposition(g, g.vertices(), bad_count));
  auto uncovered = ok;
  uncovered.walks.pop_back();
  uncovered.even_walk_count = 3;
  uncovered.covered = labels({1, 2, 3, 4, 5, 6});
  CHECK(validate_ear_decomposition(g, g.vertices(), uncovered));
  auto reentry = ok;
  reentry.walks[2] = {{3, 4, 5, 4}, WalkKind::Open};
  CHECK(validate_ear_decomposition(g, g.vertices(), reentry));
}

TEST_CASE("optimizer matches the generic walk oracle on all small connected graphs") {
  int checked = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& g : brute::connected_graphs(n)) {
      EarSolver solver(g);
      const brute::Mask all = (1u << n) - 1;
      auto ref = brute::phi_star(g, all);
      auto got = solver.phi_star_component(g.vertices());
      REQUIRE(ref.has_value() == got.has_value());
      if (!ref) continue;
      CHECK(*got == *ref);
      auto dec = solver.decomposition(g.vertices());
      CHECK_FALSE(validate_ear_decomposition(g, g.vertices(), dec));
      CHECK(dec.even_walk_count == *ref);
      CHECK((*got + n - 1) % 2 == 0);
      CHECK(solver.s_invariant()->value == *brute::s_invariant(g));
      // every Gamma_U that is strongly non-bipartite, and every v next to U
      for (brute::Mask u = 1; u <= all; ++u) {
        auto mu = solver.mu_star_on(VertexSet(u));
        CHECK(mu.has_value() == brute::mu_star(g, u).has_value());
        if (!mu) continue;
        CHECK(*mu == *brute::mu_star(g, u));
        for (int v = 0; v < n; ++v) {
          if ((u >> v & 1) || !g.neighbors(v).intersects(VertexSet(u))) continue;
          CHECK(mu_star_extension_bound_check(g, VertexSet(u), v));
        }
      }
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("covering leftover edges as odd walks keeps the even count") {
  // Appending each unused edge as a length-1 walk yields an edge-covering
  // decomposition with the same even-walk count, and it still validates.
  for (int n = 3; n <= 6; ++n) {
    for (const auto& g : brute::connected_graphs(n)) {
      if (is_bipartite(g).bipartite) continue;
      EarSolver solver(g);
      auto dec = solver.decomposition(g.vertices());
      std::set<std::pair<int, int>> used;
      for (const auto& w : dec.walks) {
        for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
          int a = w.vertices[i], b = w.vertices[i + 1];
          used.emplace(std::min(a, b), std::max(a, b));
        }
      }
      auto full = dec;
      for (auto e : g.edges()) {
        if (!used.count(e)) full.walks.push_back({{e.first, e.second}, WalkKind::Open});
      }
      CHECK_FALSE(validate_ear_decomposition(g, g.vertices(), full));
      CHECK(full.even_walk_count == dec.even_walk_count);
    }
  }
}
