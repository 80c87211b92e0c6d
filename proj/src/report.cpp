#include "edgedepth/report.hpp"

#include <algorithm>
#include <sstream>

#include "edgedepth/catalog.hpp"
#include "edgedepth/parallel.hpp"

namespace edgedepth {

int default_t_max(DepthEngine& engine) {
  auto s = engine.s_invariant();
  return s ? s->value + 2 : 4;
}

int resolve_t_max(DepthEngine& engine, const AnalyzeOptions& opt) {
  return opt.t_max > 0 ? opt.t_max : default_t_max(engine);
}

Json invariants_json(DepthEngine& engine) {
  const Graph& g = engine.graph();
  Json j;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["connected"] = is_connected(g);
  j["bipartite"] = is_bipartite(g).bipartite;
  j["strongly_non_bipartite"] = is_strongly_non_bipartite(g);
  j["diameter"] = to_json(diameter(g));
  j["complement_diameter"] = to_json(complement_diameter(g));
  j["maximal_independent_sets"] = to_json(engine.maximal_independent());
  if (is_strongly_non_bipartite(g)) {
    int phi = 0;
    Json ears = Json::array();
    for (VertexSet c : connected_components(g)) {
      phi += *engine.solver().phi_star_component(c);
      ears.push_back(to_json(engine.solver().decomposition(c)));
    }
    j["phi_star"] = phi;
    j["mu_star"] = *engine.solver().mu_star_on(g.vertices());
    j["ear_decompositions"] = ears;
  } else {
    j["phi_star"] = nullptr;
    j["mu_star"] = nullptr;
  }
  if (auto s = engine.s_invariant()) {
    j["s_invariant"] = {{"value", s->value}, {"U", to_json(s->witness)}};
  } else {
    j["s_invariant"] = nullptr;
  }
  auto cycles = odd_cycles(g);
  Json oc{{"count", cycles.size()}, {"only_dominating", has_only_dominating_odd_cycles(g)}};
  if (!cycles.empty()) {
    auto shortest = *std::min_element(cycles.begin(), cycles.end(),
                                      [](const auto& a, const auto& b) { return a.size() < b.size(); });
    oc["shortest"] = vertex_sequence(shortest);
    oc["non_dominating"] = std::count_if(cycles.begin(), cycles.end(),
                                         [&](const auto& c) { return !is_dominating_cycle(g, c); });
  }
  j["odd_cycles"] = oc;
  if (auto p = disjoint_connected_mis_pair(g)) {
    j["mis_pair"] = {{"F", to_json(p->first)}, {"G", to_json(p->second)}};
  } else {
    j["mis_pair"] = nullptr;
  }
  return j;
}

namespace {

Json graph_header(const Graph& g) { return {{"graph", graph_to_json(g)}, {"graph6", to_graph6(g)}}; }

CheckOptions check_options(int t_max, const AnalyzeOptions& opt) {
  CheckOptions c;
  c.t_max = t_max;
  c.with_oracle = opt.with_oracle;
  c.prime = opt.prime;
  return c;
}

Json checks_json(DepthEngine& e, int t_max, const AnalyzeOptions& opt) {
  Json out = Json::array();
  for (const auto& c : check_all(e, check_options(t_max, opt))) out.push_back(to_json(c));
  return out;
}

}  // namespace

Json analyze(const Graph& g, const AnalyzeOptions& opt) {
  DepthEngine e(g);
  const int t_max = resolve_t_max(e, opt);
  Json j = graph_header(g);
  j["t_max"] = t_max;
  j["invariants"] = invariants_json(e);
  j["profile"] = to_json(e.profile(t_max, opt.with_oracle, opt.prime));
  j["checks"] = checks_json(e, t_max, opt);
  return j;
}

Json profile_entry(const Graph& g, const AnalyzeOptions& opt) {
  DepthEngine e(g);
  const int t_max = resolve_t_max(e, opt);
  Json j = graph_header(g);
  j["t_max"] = t_max;
  j["profile"] = to_json(e.profile(t_max, opt.with_oracle, opt.prime));
  return j;
}

Json check_entry(const Graph& g, const AnalyzeOptions& opt) {
  DepthEngine e(g);
  const int t_max = resolve_t_max(e, opt);
  Json j = graph_header(g);
  j["t_max"] = t_max;
  j["checks"] = checks_json(e, t_max, opt);
  return j;
}

Json invariants_entry(const Graph& g) {
  DepthEngine e(g);
  Json j = graph_header(g);
  j["invariants"] = invariants_json(e);
  return j;
}

Json document(const std::string& kind, Json parameters, Json results) {
  return {{"schema", kSchema}, {"kind", kind}, {"parameters", std::move(parameters)},
          {"results", std::move(results)}};
}

std::string profile_tsv_header() {
  return "index\tgraph6\tt\tordinary\tordinary_depth\tsymbolic\tsymbolic_depth\n";
}

std::string profile_tsv_rows(std::size_t index, const Json& entry) {
  std::ostringstream out;
  const Json& p = entry.at("profile");
  auto depth = [](const Json& c) { return c.at("depth").is_null() ? std::string("-") : c.at("depth").dump(); };
  for (std::size_t i = 0; i < p.at("ordinary").size(); ++i) {
    const Json& o = p["ordinary"][i];
    const Json& s = p["symbolic"][i];
    out << index << '\t' << entry.at("graph6").get<std::string>() << '\t' << o.at("t") << '\t'
        << o.at("class").get<std::string>() << '\t' << depth(o) << '\t' << s.at("class").get<std::string>()
        << '\t' << depth(s) << '\n';
  }
  return out.str();
}

std::string ConjectureReport::status() const {
  return found() ? "COUNTEREXAMPLE_FOUND" : "NO_COUNTEREXAMPLE";
}

namespace {

struct GraphScan {
  bool h1_applies = false;
  bool plus3_applies = false;
  int h1_premises = 0;
  int plus3_premises = 0;
  std::vector<Counterexample> h1;
  std::vector<Counterexample> plus3;
};

GraphScan scan_graph(const Graph& g, int t_max) {
  GraphScan out;
  if (!is_connected(g)) return out;
  DepthEngine e(g);
  out.h1_applies = true;
  for (int t = 1; t < t_max; ++t) {
    Decision now = e.h1_nonzero(t);
    if (!now.holds) continue;
    ++out.h1_premises;
    if (!e.h1_nonzero(t + 1).holds) {
      out.h1.push_back({g, t, {{"h1_witness", to_json(now.witness)}, {"h1_next", false}}});
    }
  }
  if (is_bipartite(g).bipartite) return out;
  out.plus3_applies = true;
  for (int t = 1; t <= t_max; ++t) {
    DepthClass c = e.classify(t);
    if (c.kind != DepthKind::One) continue;
    ++out.plus3_premises;
    if (!e.depth_zero(t + 3).holds) {
      auto s = e.s_invariant();
      out.plus3.push_back({g, t, {{"class", to_json(c)}, {"s_invariant", s ? Json(s->value) : Json(nullptr)}}});
    }
  }
  return out;
}

}  // namespace

std::vector<ConjectureReport> run_conjecture_search(const std::vector<Graph>& catalog, int t_max, int jobs) {
  if (t_max < 2) throw std::invalid_argument("conjecture search needs t_max >= 2");
  auto scans = parallel_map(catalog.size(), jobs, [&](std::size_t i) { return scan_graph(catalog[i], t_max); });
  ConjectureReport h1, plus3;
  h1.id = "H1_PERSISTENCE";
  plus3.id = "DEPTH1_PLUS3_ZERO";
  h1.t_max = plus3.t_max = t_max;
  for (auto& s : scans) {
    if (s.h1_applies) ++h1.graphs_scanned;
    if (s.plus3_applies) ++plus3.graphs_scanned;
    h1.premises += s.h1_premises;
    plus3.premises += s.plus3_premises;
    for (auto& c : s.h1) h1.counterexamples.push_back(std::move(c));
    for (auto& c : s.plus3) plus3.counterexamples.push_back(std::move(c));
  }
  return {h1, plus3};
}

Json to_json(const ConjectureReport& r) {
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) {
    Json j = graph_header(c.graph);
    j["t"] = c.t;
    j["evidence"] = c.evidence;
    ces.push_back(j);
  }
  Json range = r.id == "H1_PERSISTENCE" ? Json{1, r.t_max - 1} : Json{1, r.t_max};
  return {{"conjecture", r.id}, {"graphs_scanned", r.graphs_scanned}, {"t_range", range},
          {"premises", r.premises}, {"counterexamples", ces}, {"status", r.status()}};
}

// Replay. Nothing below uses DepthEngine except to recompute claims that
// have no certificate (a vanishing H1).
namespace {

class Verifier {
 public:
  VerifyResult result;

  void fail(const std::string& where, const std::string& what) {
    result.failures.push_back(where + ": " + what);
  }
  void expect(bool ok, const std::string& where, const std::string& what) {
    ++result.checked;
    if (!ok) fail(where, what);
  }

  static bool dominates_within(const Graph& g, VertexSet scope, VertexSet u) {
    return u.subset_of(scope) && scope.subset_of(closed_neighborhood(g, u));
  }

  // Witness for ordinary (symbolic = false) or symbolic power t.
  void witness(const Graph& g, int t, bool symbolic, const Json& w, const std::string& where) {
    if (w.is_null()) return;
    const std::string type = w.at("type");
    if (type == "DOMINATING_SET") {
      VertexSet u = vertex_set_from_json(w.at("U"));
      EarSolver fresh(g);
      auto mu = fresh.mu_star_on(u);
      expect(is_dominating(g, u), where, "U is not dominating");
      expect(mu && *mu == w.at("mu").get<int>() && *mu < t, where, "mu*(U) does not certify depth zero");
    } else if (type == "SOCLE_MONOMIAL") {
      Monomial a = monomial_from_json(w.at("a"));
      MonomialIdeal j = symbolic ? symbolic_power_generators(g, t) : power(edge_ideal(g), t);
      IdealMembershipTable tab(j, std::max(j.max_exponent(), *std::max_element(a.exponents().begin(), a.exponents().end()) + 1));
      bool ok = !tab.contains(a);
      for (int i = 0; i < g.order(); ++i) ok = ok && tab.contains(a * Monomial::variable(g.order(), i));
      expect(ok, where, "socle monomial fails");
    } else if (type == "MAXIMAL_NEIGHBORHOOD") {
      int v = w.at("v").get<int>() - 1;
      expect(v >= 0 && v < g.order() && g.closed_neighborhood(v) == g.vertices(), where, "N[v] != V");
    } else if (type == "LOCALIZED_VERTEX") {
      int v = w.at("v").get<int>() - 1;
      VertexSet rest = g.vertices() - g.closed_neighborhood(v);
      VertexSet u = vertex_set_from_json(w.at("U"));
      EarSolver fresh(g);
      auto mu = fresh.mu_star_on(u);
      expect(dominates_within(g, rest, u), where, "U does not dominate V \\ N[v]");
      expect(mu && *mu == w.at("mu").get<int>() && *mu < t, where, "mu*(U) does not certify localized depth zero");
    } else if (type == "DISCONNECTING_VECTOR") {
      Monomial a = monomial_from_json(w.at("a"));
      MonomialIdeal j = symbolic ? symbolic_power_generators(g, t) : power(edge_ideal(g), t);
      SimplicialComplex d = degree_complex(j, a);
      expect(is_disconnected(d), where, "degree complex is connected");
      std::vector<VertexSet> comps;
      for (const auto& c : w.at("components")) comps.push_back(vertex_set_from_json(c));
      expect(d.components() == comps, where, "components differ");
    } else if (type == "MIS_PAIR") {
      mis_pair(g, w, where);
    } else {
      fail(where, "unknown witness type " + type);
    }
  }

  void mis_pair(const Graph& g, const Json& w, const std::string& where) {
    VertexSet f = vertex_set_from_json(w.at("F")), h = vertex_set_from_json(w.at("G"));
    auto maximal = [&](VertexSet s) { return is_independent(g, s) && closed_neighborhood(g, s) == g.vertices(); };
    expect(maximal(f) && maximal(h), where, "F or G is not a maximal independent set");
    expect((f & h).empty() && is_connected(g, f | h), where, "F, G not disjoint with connected union");
  }

  void profile(const Graph& g, const Json& p, const std::string& where) {
    EarSolver fresh(g);
    auto s = fresh.s_invariant();
    for (const auto& c : p.at("ordinary")) {
      const int t = c.at("t");
      const std::string kind = c.at("class");
      const std::string at = where + " ordinary t=" + std::to_string(t);
      expect((kind == "ZERO") == (s && s->value < t), at, "depth-zero class disagrees with s");
      witness(g, t, false, c.at("witness"), at);
      if (kind == "ONE") expect(!c.at("witness").is_null(), at, "ONE without witness");
    }
    for (const auto& c : p.at("symbolic")) {
      const int t = c.at("t");
      const std::string at = where + " symbolic t=" + std::to_string(t);
      expect(c.at("class") != "ZERO", at, "symbolic power reported with depth zero");
      witness(g, t, true, c.at("witness"), at);
    }
  }

  bool is_cycle(const Graph& g, const std::vector<int>& seq) {
    if (seq.size() < 3) return false;
    VertexSet seen;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      int a = seq[i], b = seq[(i + 1) % seq.size()];
      if (a < 0 || a >= g.order() || seen.contains(a) || !g.adjacent(a, b)) return false;
      seen.insert(a);
    }
    return true;
  }

  static std::vector<int> sequence(const Json& j) {
    std::vector<int> out;
    for (int x : j.get<std::vector<int>>()) out.push_back(x - 1);
    return out;
  }

  bool is_triangle(const Graph& g, VertexSet c) {
    std::vector<int> v(c.begin(), c.end());
    return v.size() == 3 && is_cycle(g, v);
  }

  void check(const Graph& g, const Json& c, const std::string& where0) {
    const std::string id = c.at("id");
    const std::string where = where0 + " " + id;
    expect(c.at("consistent").get<bool>(), where, "check reported inconsistent");
    const Json& w = c.at("witness");
    if (!c.at("hypothesis_holds").get<bool>() || w.is_null()) return;
    const Graph comp = complement_graph(g);
    if (id == "thm_2_1") {
      for (const auto& in : w.at("instances")) {
        auto cyc = sequence(in.at("cycle"));
        int v = in.at("v").get<int>() - 1, r = in.at("r");
        VertexSet cset = VertexSet::from_vertices(cyc);
        VertexSet rest = g.vertices() - g.closed_neighborhood(v);
        expect(is_cycle(g, cyc) && cyc.size() == static_cast<std::size_t>(2 * r + 1), where, "not an odd cycle");
        expect(!closed_neighborhood(g, cset).contains(v) && is_connected(g, rest), where, "v does not qualify");
        int thr = rest == cset ? r + 1 : g.order() - g.closed_neighborhood(v).size() - r - 1;
        expect(in.at("threshold").get<int>() == std::max(thr, 1), where, "threshold mismatch");
      }
    } else if (id == "thm_2_4" || id == "thm_2_6") {
      mis_pair(g, w, where);
      if (c.at("notes").contains("disconnecting_vector_at_threshold")) {
        const Json& a = c["notes"]["disconnecting_vector_at_threshold"];
        int k = vertex_set_from_json(w.at("F")).size() + vertex_set_from_json(w.at("G")).size();
        expect(!a.is_null() && is_disconnected(degree_complex(symbolic_power_generators(g, k), monomial_from_json(a))),
               where, "no disconnecting vector at the threshold");
      }
    } else if (id == "prop_4_1") {
      VertexSet a = vertex_set_from_json(w.at("A")), b = vertex_set_from_json(w.at("B"));
      bool ok = !a.empty() && !b.empty() && (a & b).empty() && (a | b) == g.vertices();
      for (int x : a) ok = ok && b.subset_of(g.neighbors(x));
      expect(ok, where, "not a join partition");
    } else if (id == "thm_4_3" && w.contains("triangle")) {
      VertexSet t = vertex_set_from_json(w.at("triangle"));
      VertexSet rest = g.vertices() - closed_neighborhood(g, t);
      expect(is_triangle(g, t) && vertex_set_from_json(w.at("outside_closed_neighborhood")) == rest &&
                 (rest.size() <= 1 || !is_connected(comp, rest)),
             where, "triangle condition fails");
    } else if (id == "prop_triangle_fifth") {
      VertexSet t = vertex_set_from_json(w.at("triangle"));
      VertexSet rest = g.vertices() - closed_neighborhood(g, t);
      expect(is_triangle(g, t) && (rest.size() <= 1 || !is_connected(comp, rest)), where, "triangle condition fails");
    } else if (id == "lemma_1_5") {
      VertexSet t = vertex_set_from_json(w.at("triangle"));
      auto path = sequence(w.at("path"));
      bool ok = is_triangle(g, t) && !path.empty() && t.contains(path[0]);
      VertexSet cover = t;
      for (std::size_t i = 1; i < path.size(); ++i) {
        ok = ok && !cover.contains(path[i]) && g.adjacent(path[i - 1], path[i]);
        cover.insert(path[i]);
      }
      expect(ok && is_dominating(g, cover) && static_cast<int>(path.size()) - 1 == w.at("s").get<int>(), where,
             "triangle with path does not dominate");
    } else if (id == "prop_3_2") {
      const int t = w.at("t");
      Monomial a = monomial_from_json(w.at("a")), b = monomial_from_json(w.at("b"));
      const MonomialIdeal i = edge_ideal(g);
      SimplicialComplex da = degree_complex(power(i, t), a), db = degree_complex(power(i, t + 1), b);
      std::vector<VertexSet> comps;
      for (const auto& x : w.at("components_b")) comps.push_back(vertex_set_from_json(x));
      expect(is_disconnected(da) && is_disconnected(db) && db.components() == comps, where, "step vector fails");
    }
  }

  void counterexample(const std::string& id, const Json& ce, const std::string& where) {
    const Graph g = graph_from_json(ce.at("graph"));
    const int t = ce.at("t");
    const Json& ev = ce.at("evidence");
    if (id == "H1_PERSISTENCE") {
      witness(g, t, false, ev.at("h1_witness"), where + " premise");
      expect(!DepthEngine(g).h1_nonzero(t + 1).holds, where, "H1 does not vanish at t+1");
    } else {
      const Json& cls = ev.at("class");
      witness(g, t, false, cls.at("witness"), where + " premise");
      EarSolver fresh(g);
      auto s = fresh.s_invariant();
      expect(!(s && s->value < t), where, "premise has depth zero");
      expect(!(s && s->value < t + 3), where, "depth zero at t+3 after all");
    }
  }
};

}  // namespace

VerifyResult verify_report(const Json& doc) {
  Verifier v;
  if (!doc.is_object() || doc.value("schema", "") != kSchema) {
    v.fail("document", "unsupported schema");
    return v.result;
  }
  const Json& results = doc.at("results");
  for (std::size_t k = 0; k < results.size(); ++k) {
    const Json& r = results[k];
    const std::string where = "result " + std::to_string(k);
    try {
      if (r.contains("conjecture")) {
        const std::string id = r.at("conjecture");
        v.expect((r.at("status") == "COUNTEREXAMPLE_FOUND") == !r.at("counterexamples").empty(), where,
                 "status does not match the counterexample list");
        for (std::size_t i = 0; i < r.at("counterexamples").size(); ++i) {
          v.counterexample(id, r["counterexamples"][i], where + " counterexample " + std::to_string(i));
        }
        continue;
      }
      const Graph g = graph_from_json(r.at("graph"));
      v.expect(to_graph6(g) == r.at("graph6").get<std::string>(), where, "graph6 mismatch");
      if (r.contains("profile")) v.profile(g, r["profile"], where);
      if (r.contains("checks")) {
        for (const auto& c : r["checks"]) v.check(g, c, where);
      }
      if (r.contains("invariants") && !r["invariants"].at("s_invariant").is_null()) {
        const Json& s = r["invariants"]["s_invariant"];
        VertexSet u = vertex_set_from_json(s.at("U"));
        EarSolver fresh(g);
        auto mu = fresh.mu_star_on(u);
        auto best = fresh.s_invariant();
        v.expect(is_dominating(g, u) && mu && *mu == s.at("value").get<int>() && best && best->value == *mu,
                 where, "s invariant witness fails");
      }
    } catch (const std::exception& e) {
      v.fail(where, std::string("malformed entry: ") + e.what());
    }
  }
  return v.result;
}

}  // namespace edgedepth
