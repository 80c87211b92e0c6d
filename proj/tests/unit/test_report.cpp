#include "doctest.h"
#include "edgedepth/catalog.hpp"
#include "edgedepth/report.hpp"
#include "support/fixtures.hpp"

using namespace edgedepth;

namespace {
std::vector<std::string> classes(const Json& entries) {
  std::vector<std::string> out;
  for (const auto& c : entries) out.push_back(c.at("class"));
  return out;
}
}  // namespace

TEST_CASE("analysis documents") {
  AnalyzeOptions opt;
  opt.t_max = 4;
  opt.with_oracle = true;
  Json c5 = analyze(fixtures::c5(), opt);
  CHECK(c5["invariants"]["s_invariant"]["value"] == 2);
  std::vector<int> depths;
  for (const auto& c : c5["profile"]["ordinary"]) depths.push_back(c["depth"]);
  CHECK(depths == std::vector<int>{2, 2, 0, 0});

  Json f1 = analyze(fixtures::tail4(), {});
  CHECK(f1["t_max"] == 6);
  CHECK(f1["invariants"]["s_invariant"]["value"] == 4);
  bool square = false;
  for (const auto& c : f1["checks"]) {
    if (c["id"] == "thm_4_3") square = c["predicted"] == "depth R/I^2 <= 1";
  }
  CHECK(square);

  Json k2 = analyze(fixtures::k2(), {});
  CHECK(k2["t_max"] == 4);
  CHECK(classes(k2["profile"]["symbolic"]) == std::vector<std::string>(4, "ONE"));
  CHECK(k2["invariants"]["s_invariant"].is_null());

  CHECK(c5.dump() == analyze(fixtures::c5(), opt).dump());
}

TEST_CASE("conjecture search examples") {
  auto f1 = run_conjecture_search({fixtures::tail4()}, 5);
  REQUIRE(f1.size() == 2);
  CHECK(f1[1].id == "DEPTH1_PLUS3_ZERO");
  CHECK(f1[1].status() == "NO_COUNTEREXAMPLE");
  CHECK(f1[1].premises == 3);  // t = 2, 3, 4; t = 2 reaches depth zero exactly at 5

  auto c5 = run_conjecture_search({fixtures::c5()}, 5);
  CHECK(c5[1].premises == 0);
  CHECK(c5[1].graphs_scanned == 1);
  CHECK(c5[0].premises > 0);

  auto bip = run_conjecture_search({named::path(4)}, 4);
  CHECK(bip[0].graphs_scanned == 1);
  CHECK(bip[1].graphs_scanned == 0);
  CHECK_THROWS(run_conjecture_search({fixtures::c5()}, 1));
}

TEST_CASE("search is independent of the worker count") {
  auto graphs = generate_connected_graphs(6, true);
  Json a = Json::array(), b = Json::array();
  for (const auto& r : run_conjecture_search(graphs, 5, 1)) a.push_back(to_json(r));
  for (const auto& r : run_conjecture_search(graphs, 5, 3)) b.push_back(to_json(r));
  CHECK(a == b);
  for (const auto& r : a) CHECK(r["status"] == "NO_COUNTEREXAMPLE");
}

TEST_CASE("verification replay") {
  AnalyzeOptions opt;
  opt.t_max = 5;
  Json results = Json::array();
  for (const Graph& g : {fixtures::c5(), fixtures::tail4(), fixtures::cone_pendant(), fixtures::triangle_fork(), fixtures::triangle()}) {
    results.push_back(analyze(g, opt));
  }
  Json doc = document("analysis", {}, results);
  VerifyResult ok = verify_report(doc);
  CHECK(ok.ok());
  CHECK(ok.checked > 50);

  Json bad = doc;
  auto& w = bad["results"][1]["profile"]["ordinary"][4]["witness"];
  REQUIRE(w["type"] == "DOMINATING_SET");
  w["mu"] = 1;
  CHECK_FALSE(verify_report(bad).ok());

  Json bad2 = doc;
  for (auto& c : bad2["results"][0]["profile"]["symbolic"]) {
    if (c["witness"].is_object() && c["witness"]["type"] == "DISCONNECTING_VECTOR") {
      c["witness"]["a"] = Json{0, 0, 0, 0, 0};
      break;
    }
  }
  CHECK_FALSE(verify_report(bad2).ok());

  Json bad3 = doc;
  bad3["schema"] = "other";
  CHECK_FALSE(verify_report(bad3).ok());
}

TEST_CASE("tsv rows") {
  AnalyzeOptions opt;
  opt.t_max = 2;
  Json e = profile_entry(fixtures::triangle(), opt);
  CHECK(profile_tsv_rows(0, e) == "0\tBw\t1\tONE\t1\tONE\t1\n0\tBw\t2\tZERO\t0\tONE\t1\n");
}
