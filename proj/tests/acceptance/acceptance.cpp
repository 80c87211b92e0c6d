// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
//
//   edgedepth_acceptance [--cli PATH --catalog PATH] [--only N]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "edgedepth/catalog.hpp"
#include "edgedepth/criteria.hpp"
#include "edgedepth/named.hpp"
#include "edgedepth/report.hpp"

using namespace edgedepth;

namespace {

// Time limits in seconds.
constexpr double kLimit1 = 10;
constexpr double kLimit2 = 60;
constexpr double kLimit3 = 1;
constexpr double kLimit4 = 15 * 60;
constexpr double kLimit9 = 2 * 60 * 60;

constexpr std::uint32_t kFacetSeed = 20240601;
constexpr std::uint32_t kCapSeed = 4171;
constexpr int kFacetSamples = 200;
constexpr int kCapSamples = 1000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

const std::vector<Graph>& catalog6() {
  static const std::vector<Graph> graphs = [] {
    std::vector<Graph> out;
    for (int n = 2; n <= 6; ++n) {
      for (auto& g : generate_connected_graphs(n)) out.push_back(std::move(g));
    }
    return out;
  }();
  return graphs;
}

std::string kinds(const std::vector<DepthClass>& cs) {
  std::string s;
  for (const auto& c : cs) {
    if (!s.empty()) s += ",";
    s += to_string(c.kind);
    if (c.exact_depth) s += "(" + std::to_string(*c.exact_depth) + ")";
  }
  return s;
}

Outcome pentagon() {
  DepthProfile p = DepthEngine(named::cycle(5)).profile(4, true);
  const std::vector<int> want{2, 2, 0, 0};
  bool ok = true;
  for (int t = 1; t <= 4; ++t) {
    const DepthClass& c = p.ordinary[t - 1];
    ok = ok && c.exact_depth == want[t - 1] && c.oracle_consistent.value_or(false) &&
         c.kind == (want[t - 1] == 0 ? DepthKind::Zero : DepthKind::AtLeastTwo);
  }
  return {ok, "C5 ordinary " + kinds(p.ordinary)};
}

Outcome triangle_tail() {
  DepthEngine e(named::triangle_with_tail(4));
  DepthProfile p = e.profile(5, true);
  auto s = e.s_invariant();
  bool ok = s && s->value == 4;
  const std::vector<DepthKind> want{DepthKind::One, DepthKind::One, DepthKind::One, DepthKind::Zero};
  for (int t = 2; t <= 5; ++t) {
    ok = ok && p.ordinary[t - 1].kind == want[t - 2] && p.ordinary[t - 1].oracle_consistent.value_or(false);
  }
  return {ok, "s=" + (s ? std::to_string(s->value) : std::string("undefined")) + " ordinary " + kinds(p.ordinary)};
}

Outcome triangle() {
  DepthEngine e(named::complete(3));
  DepthKind k1 = e.classify(1).kind, k2 = e.classify(2).kind;
  auto join = check_prop_4_1(e, {});
  auto dec = check_decrease_theorems(e, {});
  bool ok = k1 == DepthKind::One && k2 == DepthKind::Zero && join.consistent() && dec.front().consistent();
  return {ok, "t=1 " + to_string(k1) + ", t=2 " + to_string(k2)};
}

Outcome oracle_triangulation() {
  int runs = 0, disagreements = 0, zeros = 0, ones = 0;
  std::string first;
  for (const Graph& g : catalog6()) {
    DepthEngine e(g);
    const MonomialIdeal i = edge_ideal(g);
    for (int t = 1; t <= 3; ++t) {
      const MonomialIdeal j = power(i, t);
      const bool ear = e.depth_zero(t).holds;
      const bool socle = socle_witness(j, t).has_value();
      const int d = depth_oracle(j);
      const bool one = e.classify(t).kind == DepthKind::One;
      ++runs;
      zeros += d == 0;
      ones += d == 1;
      if (ear != socle || ear != (d == 0) || one != (d == 1)) {
        ++disagreements;
        if (first.empty()) first = " first " + to_graph6(g) + " t=" + std::to_string(t);
      }
    }
  }
  return {disagreements == 0 && catalog6().size() == 142,
          std::to_string(catalog6().size()) + " graphs, " + std::to_string(runs) + " (graph,t) pairs, depth0=" +
              std::to_string(zeros) + " depth1=" + std::to_string(ones) + ", disagreements=" +
              std::to_string(disagreements) + first};
}

Outcome facet_law() {
  std::mt19937 rng(kFacetSeed);
  int samples = 0, failures = 0;
  for (const Graph& g : catalog6()) {
    const auto mis = maximal_independent_sets(g);
    for (int t = 1; t <= 3; ++t) {
      const MonomialIdeal j = symbolic_power_generators(g, t);
      std::uniform_int_distribution<int> coord(0, t + 1);
      for (int k = 0; k < kFacetSamples; ++k) {
        std::vector<int> a(g.order());
        for (int& x : a) x = coord(rng);
        const Monomial m(a);
        ++samples;
        SimplicialComplex direct = degree_complex(j, m);
        SimplicialComplex law(g.order(), symbolic_facets(mis, m, t));
        if (!(direct == law)) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(samples) + " samples, failures=" + std::to_string(failures)};
}

Outcome count_checks(const std::vector<std::string>& ids, int t_max,
                     const std::function<std::vector<TheoremCheck>(DepthEngine&, const CheckOptions&)>& run) {
  std::map<std::string, std::pair<int, int>> tally;  // id -> (certified graphs, failures)
  for (const auto& id : ids) tally[id] = {0, 0};
  int points = 0;
  for (const Graph& g : catalog6()) {
    DepthEngine e(g);
    CheckOptions opt;
    opt.t_max = t_max;
    for (const auto& c : run(e, opt)) {
      auto it = tally.find(c.id);
      if (it == tally.end()) continue;
      if (c.hypothesis_holds) ++it->second.first;
      points += static_cast<int>(c.verified.size());
      if (!c.consistent()) ++it->second.second;
    }
  }
  bool ok = true;
  std::ostringstream s;
  s << points << " points;";
  for (const auto& [id, v] : tally) {
    s << " " << id << " " << v.first << "/" << v.second;
    ok = ok && v.second == 0;
  }
  s << " (certified/failures)";
  return {ok, s.str()};
}

Outcome persistence() {
  return count_checks({"cor_1_2", "thm_3_5", "prop_3_1", "thm_3_4", "prop_3_2", "remark_3_3"}, 4,
                      [](DepthEngine& e, const CheckOptions& o) { return check_persistence_props(e, o); });
}

Outcome thresholds() {
  return count_checks({"thm_2_1", "thm_2_4", "thm_2_6", "lemma_1_5", "thm_4_8"}, 6,
                      [](DepthEngine& e, const CheckOptions& o) {
                        std::vector<TheoremCheck> out{check_thm_2_1(e, o)};
                        for (auto& c : check_thm_2_4_and_2_6(e, o)) out.push_back(std::move(c));
                        for (auto& c : check_decrease_theorems(e, o)) out.push_back(std::move(c));
                        return out;
                      });
}

Outcome cap_invariance() {
  std::mt19937 rng(kCapSeed);
  const auto& graphs = catalog6();
  std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
  std::uniform_int_distribution<int> tdist(1, 4);
  int failures = 0;
  for (int k = 0; k < kCapSamples; ++k) {
    const Graph& g = graphs[pick(rng)];
    const int t = tdist(rng);
    std::uniform_int_distribution<int> coord(0, 2 * t + 2);
    std::vector<int> a(g.order());
    for (int& x : a) x = coord(rng);
    const Monomial m(a), capped = m.capped(t);
    const MonomialIdeal j = power(edge_ideal(g), t);
    bool ok = degree_complex(j, m) == degree_complex(j, capped);
    ok = ok && DepthEngine(g).ordinary_degree_complex(m, t) == degree_complex(j, m);
    ok = ok && edge_power_membership(g, m, t) == edge_power_membership(g, capped, t);
    ok = ok && j.contains(m) == j.contains(capped);
    IdealMembershipTable small(j, t), large(j, 2 * t + 2);
    ok = ok && small.contains(capped) == large.contains(m);
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(kCapSamples) + " triples, failures=" + std::to_string(failures)};
}

Outcome conjecture_harness(const std::string& cli, const std::string& catalog) {
  if (cli.empty() || catalog.empty()) return {false, "needs --cli and --catalog"};
  const std::string out = "acceptance_search.json";
  const std::string cmd = "\"" + cli + "\" search-conjectures \"" + catalog + "\" --tmax 5 --out " + out;
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream f(out);
  if (!f) return {false, "no report written, exit " + std::to_string(code)};
  Json doc = Json::parse(f);
  VerifyResult v = verify_report(doc);
  std::ostringstream s;
  bool found = false;
  for (const auto& r : doc["results"]) {
    s << r["conjecture"].get<std::string>() << "=" << r["status"].get<std::string>() << " ("
      << r["graphs_scanned"] << " graphs, " << r["premises"] << " premises) ";
    found = found || r["status"] == "COUNTEREXAMPLE_FOUND";
  }
  s << "exit " << code << ", replay " << v.checked << " checks/" << v.failures.size() << " failures";
  const bool ok = v.ok() && ((code == 0 && !found) || (code == 2 && found));
  return {ok, s.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli, catalog;
  int only = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string k = argv[i];
    if (k == "--cli") cli = argv[i + 1];
    if (k == "--catalog") catalog = argv[i + 1];
    if (k == "--only") only = std::atoi(argv[i + 1]);
  }
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const double none = 0;
  std::vector<Criterion> criteria{
      {1, "pentagon profile", kLimit1, pentagon},
      {2, "triangle with tail s=4", kLimit2, triangle_tail},
      {3, "triangle", kLimit3, triangle},
      {4, "oracle triangulation n<=6 t<=3", kLimit4, oracle_triangulation},
      {5, "symbolic facet law", none, facet_law},
      {6, "persistence suite t<=4", none, persistence},
      {7, "threshold theorems", none, thresholds},
      {8, "cap invariance", none, cap_invariance},
      {9, "conjecture harness n<=7 t<=5", kLimit9, [&] { return conjecture_harness(cli, catalog); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit <= 0 || secs < c.limit;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("criterion %d %s %s [%.2fs%s] %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs,
                in_time ? "" : " over limit", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
