#include <algorithm>

#include "doctest.h"
#include "edgedepth/criteria.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace edgedepth;
using fixtures::labels;

namespace {
const TheoremCheck& find(const std::vector<TheoremCheck>& cs, const std::string& id) {
  auto it = std::find_if(cs.begin(), cs.end(), [&](const TheoremCheck& c) { return c.id == id; });
  REQUIRE(it != cs.end());
  return *it;
}
}  // namespace

TEST_CASE("h1 threshold from a far vertex") {
  DepthEngine e(fixtures::tail4());
  CheckOptions opt;
  opt.t_max = 4;
  auto c = check_thm_2_1(e, opt);
  CHECK(c.hypothesis_holds);
  CHECK(c.consistent());
  bool v7 = false;
  for (const auto& in : c.witness["instances"]) {
    if (in["v"] == 7 && in["cycle"] == Json({1, 2, 3})) {
      v7 = true;
      CHECK(in["case"] == 2);
      CHECK(in["threshold"] == 3);
    }
  }
  CHECK(v7);
  CHECK(c.witness["threshold"] == 2);
  CHECK(c.notes["first_h1"] == 2);
  for (int t = 3; t <= 4; ++t) CHECK(e.h1_nonzero(t).holds);

  DepthEngine f3(fixtures::triangle_fork());
  CHECK_FALSE(check_thm_2_1(f3, opt).hypothesis_holds);
  DepthEngine c5(fixtures::c5());
  CHECK_FALSE(check_thm_2_1(c5, opt).hypothesis_holds);
}

TEST_CASE("first h1 below threshold on the cone with pendant") {
  DepthEngine e(fixtures::cone_pendant());
  auto c = check_thm_2_1(e, {});
  if (c.hypothesis_holds) {
    CHECK(c.notes["first_h1"] == 1);
    CHECK(c.notes["below_threshold"] == true);
  }
  CHECK(e.h1_nonzero(1).holds);
}

TEST_CASE("mis pair thresholds") {
  CheckOptions opt;
  opt.t_max = 5;
  DepthEngine c5(fixtures::c5());
  auto cs = check_thm_2_4_and_2_6(c5, opt);
  REQUIRE(cs.size() == 2);
  for (const auto& c : cs) {
    CHECK(c.hypothesis_holds);
    CHECK(c.consistent());
    CHECK(c.verified.size() == 2);
    CHECK(c.verified.front().t == 4);
  }
  auto f = vertex_set_from_json(cs[0].witness["F"]);
  auto g = vertex_set_from_json(cs[0].witness["G"]);
  CHECK(f.size() + g.size() == 4);

  DepthEngine k2(fixtures::k2());
  auto ks = check_thm_2_4_and_2_6(k2, opt);
  CHECK(ks[0].hypothesis_holds);
  CHECK(ks[0].verified.front().t == 2);
  CHECK(ks[0].consistent());
  CHECK_FALSE(ks[1].hypothesis_holds);

  DepthEngine tri(fixtures::triangle());
  auto ts = check_thm_2_4_and_2_6(tri, opt);
  CHECK(ts[1].hypothesis_holds);
  CHECK(ts[1].notes["first_t"] == 1);
  CHECK(ts[1].notes["below_threshold"] == true);
}

TEST_CASE("pair converse on the catalog") {
  CheckOptions opt;
  opt.t_max = 4;
  int without = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : brute::connected_graphs(n)) {
      DepthEngine e(g);
      auto cs = check_thm_2_4_and_2_6(e, opt);
      for (const auto& c : cs) CHECK(c.consistent());
      CHECK_FALSE(cs[0].witness.is_null());
    }
  }
  for (const Graph& g : brute::connected_graphs(6)) {
    if (disjoint_connected_mis_pair(g)) continue;
    ++without;
    DepthEngine e(g);
    auto c = check_thm_2_4_and_2_6(e, opt)[0];
    CHECK(c.predicted == "never depth R/I^(t) = 1");
    CHECK(c.consistent());
  }
  CHECK(without == 1);
}

TEST_CASE("join partition") {
  CheckOptions opt;
  opt.with_oracle = true;
  DepthEngine tri(fixtures::triangle());
  auto c = check_prop_4_1(tri, opt);
  CHECK(c.predicted == "depth R/I = 1");
  CHECK(vertex_set_from_json(c.witness["A"]) == labels({1}));
  CHECK(vertex_set_from_json(c.witness["B"]) == labels({2, 3}));
  CHECK(c.consistent());
  DepthEngine f2(fixtures::cone_pendant());
  auto c2 = check_prop_4_1(f2, opt);
  CHECK(vertex_set_from_json(c2.witness["A"]) == labels({4}));
  CHECK(c2.consistent());
  DepthEngine c5(fixtures::c5());
  auto c3 = check_prop_4_1(c5, opt);
  CHECK(c3.witness.is_null());
  CHECK(c3.consistent());
}

TEST_CASE("square criterion") {
  CheckOptions opt;
  opt.with_oracle = true;
  DepthEngine f1(fixtures::tail4());
  auto c = check_thm_4_3(f1, opt);
  CHECK(c.witness["condition2"] == true);
  CHECK(vertex_set_from_json(c.witness["triangle"]) == labels({1, 2, 3}));
  CHECK(vertex_set_from_json(c.witness["outside_closed_neighborhood"]) == labels({5, 6, 7}));
  CHECK(c.verified[0].engine == "ONE");
  CHECK(c.consistent());
  DepthEngine c5(fixtures::c5());
  auto d = check_thm_4_3(c5, opt);
  CHECK(d.predicted == "depth R/I^2 >= 2");
  CHECK(d.consistent());
  DepthEngine tri(fixtures::triangle());
  auto t = check_thm_4_3(tri, opt);
  CHECK(t.witness["condition2"] == true);
  CHECK(t.consistent());
}

TEST_CASE("decrease theorems") {
  CheckOptions opt;
  opt.t_max = 4;
  DepthEngine tri(fixtures::triangle());
  auto ts = check_decrease_theorems(tri, opt);
  CHECK(find(ts, "thm_4_2").hypothesis_holds);
  CHECK(find(ts, "thm_4_2").consistent());

  DepthEngine f1(fixtures::tail4());
  auto fs = check_decrease_theorems(f1, opt);
  const auto& t44 = find(fs, "thm_4_4");
  CHECK(t44.hypothesis_holds);
  CHECK(t44.consistent());
  CHECK(t44.notes["sharp"] == true);
  const auto& t48 = find(fs, "thm_4_8");
  CHECK(t48.consistent());
  CHECK(f1.localized_depth_zero(6, 3).holds);
  bool seen = std::any_of(t48.verified.begin(), t48.verified.end(),
                          [](const VerifiedPoint& p) { return p.t == 6 && p.detail == "v=7"; });
  CHECK(seen);
  const auto& l15 = find(fs, "lemma_1_5");
  // triangle plus the path 3-4-5-6 already dominates
  CHECK(l15.witness["s"] == 3);
  CHECK(l15.verified.front().t == 5);
  CHECK(l15.notes["s_invariant_bound_holds"] == true);
  CHECK(find(fs, "prop_triangle_fifth").consistent());

  DepthEngine c5(fixtures::c5());
  for (const auto& c : check_decrease_theorems(c5, opt)) CHECK(c.consistent());
}

TEST_CASE("persistence") {
  CheckOptions opt;
  opt.t_max = 4;
  DepthEngine c5(fixtures::c5());
  auto cs = check_persistence_props(c5, opt);
  CHECK(find(cs, "thm_3_4").hypothesis_holds);
  for (const auto& c : cs) CHECK(c.consistent());

  DepthEngine f1(fixtures::tail4());
  auto fs = check_persistence_props(f1, opt);
  const auto& p31 = find(fs, "prop_3_1");
  CHECK(std::any_of(p31.verified.begin(), p31.verified.end(),
                    [](const VerifiedPoint& p) { return p.t == 4 && p.detail == "v=7"; }));
  for (const auto& c : fs) CHECK(c.consistent());

  DepthEngine k2(fixtures::k2());
  const auto& t35 = find(check_persistence_props(k2, opt), "thm_3_5");
  CHECK(t35.hypothesis_holds);
  CHECK(t35.consistent());
}

TEST_CASE("all checks consistent on small graphs") {
  CheckOptions opt;
  opt.t_max = 3;
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : brute::connected_graphs(n)) {
      DepthEngine e(g);
      for (const auto& c : check_all(e, opt)) {
        INFO(c.id, " ", to_json(c).dump());
        CHECK(c.consistent());
      }
    }
  }
}
