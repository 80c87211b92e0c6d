#include "edgedepth/criteria.hpp"

#include <algorithm>

namespace edgedepth {

namespace {

std::string flag(const char* name, bool value) {
  return std::string(name) + (value ? "=true" : "=false");
}

std::string label(int v) { return std::to_string(v + 1); }

bool connected_non_bipartite(const Graph& g) {
  return is_connected(g) && !is_bipartite(g).bipartite;
}

TheoremCheck inapplicable(std::string id, std::string reason) {
  TheoremCheck c;
  c.id = std::move(id);
  c.notes["reason"] = std::move(reason);
  return c;
}

std::vector<VertexSet> triangles(const Graph& g) {
  std::vector<VertexSet> out;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) && g.adjacent(b, c)) out.push_back(VertexSet::from_vertices({a, b, c}));
      }
    }
  }
  return out;
}

// A triangle C such that V \ N[C] has at most one vertex or induces a
// disconnected subgraph of the complement.
std::optional<std::pair<VertexSet, VertexSet>> small_triangle_remainder(const Graph& g) {
  const Graph comp = complement_graph(g);
  for (VertexSet c : triangles(g)) {
    VertexSet rest = g.vertices() - closed_neighborhood(g, c);
    if (rest.size() <= 1 || !is_connected(comp, rest)) return std::pair{c, rest};
  }
  return std::nullopt;
}

bool kind_at_most_one(DepthKind k) { return k != DepthKind::AtLeastTwo; }

// Points checking depth zero at every t in [from, max(to, from)].
void verify_depth_zero_from(DepthEngine& engine, TheoremCheck& c, int from, int to,
                            const std::string& detail = {}) {
  for (int t = std::max(from, 1); t <= std::max(to, from); ++t) {
    bool z = engine.depth_zero(t).holds;
    c.verified.push_back({t, flag("zero", z), z, detail});
  }
}

}  // namespace

bool TheoremCheck::consistent() const {
  return std::all_of(verified.begin(), verified.end(),
                     [](const VerifiedPoint& p) { return p.consistent; });
}

TheoremCheck check_thm_2_1(DepthEngine& engine, const CheckOptions& opt) {
  const Graph& g = engine.graph();
  const int n = g.order();
  if (!connected_non_bipartite(g)) return inapplicable("thm_2_1", "not connected non-bipartite");
  TheoremCheck c;
  c.id = "thm_2_1";
  struct Instance {
    std::vector<int> cycle;
    int r;
    int v;
    int which;
    int threshold;
  };
  std::vector<Instance> instances;
  for (const auto& cyc : odd_cycles(g)) {
    const VertexSet cset = VertexSet::from_vertices(cyc);
    const int r = (static_cast<int>(cyc.size()) - 1) / 2;
    for (int v : g.vertices() - closed_neighborhood(g, cset)) {
      const VertexSet rest = g.vertices() - g.closed_neighborhood(v);
      if (!is_connected(g, rest)) continue;
      const bool equal = rest == cset;
      int threshold = equal ? r + 1 : n - g.closed_neighborhood(v).size() - r - 1;
      instances.push_back({cyc, r, v, equal ? 1 : 2, std::max(threshold, 1)});
    }
  }
  if (instances.empty()) {
    c.notes["reason"] = "no odd cycle with a far vertex v and Gamma_{V minus N[v]} connected";
    return c;
  }
  c.hypothesis_holds = true;
  auto best = *std::min_element(instances.begin(), instances.end(),
                                [](const Instance& a, const Instance& b) {
                                  return a.threshold < b.threshold;
                                });
  Json all = Json::array();
  for (const auto& in : instances) {
    all.push_back({{"cycle", vertex_sequence(in.cycle)}, {"r", in.r}, {"v", in.v + 1},
                   {"case", in.which}, {"threshold", in.threshold}});
  }
  c.witness = {{"cycle", vertex_sequence(best.cycle)}, {"r", best.r}, {"v", best.v + 1},
               {"case", best.which}, {"threshold", best.threshold}, {"instances", all}};
  c.predicted = "H1 != 0 for t >= " + std::to_string(best.threshold);
  for (int t = best.threshold; t <= opt.t_max; ++t) {
    bool h = engine.h1_nonzero(t).holds;
    c.verified.push_back({t, flag("h1", h), h, "v=" + label(best.v)});
  }
  Json first = nullptr;
  for (int t = 1; t <= opt.t_max; ++t) {
    if (engine.h1_nonzero(t).holds) {
      first = t;
      break;
    }
  }
  c.notes["first_h1"] = first;
  c.notes["below_threshold"] = first.is_number() && first.get<int>() < best.threshold;
  return c;
}

std::vector<TheoremCheck> check_thm_2_4_and_2_6(DepthEngine& engine, const CheckOptions& opt) {
  const Graph& g = engine.graph();
  std::vector<TheoremCheck> out;
  if (!is_connected(g)) {
    out.push_back(inapplicable("thm_2_4", "not connected"));
    out.push_back(inapplicable("thm_2_6", "not connected"));
    return out;
  }
  const auto pair = disjoint_connected_mis_pair(g);
  const int k = pair ? pair->first.size() + pair->second.size() : 0;
  Json pair_json = pair ? Json{{"F", to_json(pair->first)}, {"G", to_json(pair->second)}}
                        : Json(nullptr);

  auto run = [&](const std::string& id, const std::string& what,
                 const std::function<bool(int)>& decide) {
    TheoremCheck c;
    c.id = id;
    c.hypothesis_holds = true;
    c.witness = pair_json;
    Json first = nullptr;
    if (pair) {
      c.predicted = what + " for t >= " + std::to_string(k);
      for (int t = 1; t <= opt.t_max; ++t) {
        bool d = decide(t);
        if (d && first.is_null()) first = t;
        if (t >= k) c.verified.push_back({t, flag("holds", d), d, "pair"});
      }
    } else {
      c.predicted = "never " + what;
      for (int t = 1; t <= opt.t_max; ++t) {
        bool d = decide(t);
        if (d && first.is_null()) first = t;
        c.verified.push_back({t, flag("holds", d), !d, "no pair"});
      }
    }
    c.notes["first_t"] = first;
    if (pair) c.notes["below_threshold"] = first.is_number() && first.get<int>() < k;
    return c;
  };

  TheoremCheck sym = run("thm_2_4", "depth R/I^(t) = 1",
                         [&](int t) { return engine.symbolic_depth_one(t).holds; });
  if (pair) {
    auto a = find_disconnecting_vector(g, pair->first, pair->second, std::max(k, 1));
    sym.notes["disconnecting_vector_at_threshold"] = a ? to_json(*a) : Json(nullptr);
  }
  out.push_back(std::move(sym));

  if (is_bipartite(g).bipartite || !has_only_dominating_odd_cycles(g)) {
    out.push_back(inapplicable("thm_2_6", "needs a non-bipartite graph whose odd cycles all dominate"));
  } else {
    TheoremCheck ord =
        run("thm_2_6", "H1 != 0", [&](int t) { return engine.h1_nonzero(t).holds; });
    Json same = Json::array();
    for (int t = 1; t <= opt.t_max; ++t) {
      same.push_back(engine.h1_nonzero(t).holds == engine.symbolic_h1_nonzero(t).holds);
    }
    ord.notes["h1_matches_symbolic"] = same;
    out.push_back(std::move(ord));
  }
  return out;
}

TheoremCheck check_prop_4_1(DepthEngine& engine, const CheckOptions& opt) {
  const Graph& g = engine.graph();
  TheoremCheck c;
  c.id = "prop_4_1";
  c.hypothesis_holds = true;
  auto comps = connected_components(complement_graph(g));
  const bool join = comps.size() >= 2;
  if (join) {
    VertexSet a = *std::min_element(comps.begin(), comps.end(), [](VertexSet x, VertexSet y) {
      return x.size() != y.size() ? x.size() < y.size() : lex_less(x, y);
    });
    c.witness = {{"A", to_json(a)}, {"B", to_json(g.vertices() - a)}};
  } else {
    c.witness = nullptr;
  }
  c.predicted = join ? "depth R/I = 1" : "depth R/I != 1";
  DepthKind k = engine.classify(1).kind;
  c.verified.push_back({1, to_string(k), (k == DepthKind::One) == join, "engine"});
  if (opt.with_oracle) {
    int d = depth_oracle(edge_ideal(g), opt.prime);
    c.verified.push_back({1, "depth=" + std::to_string(d), (d == 1) == join, "oracle"});
  }
  return c;
}

TheoremCheck check_thm_4_3(DepthEngine& engine, const CheckOptions& opt) {
  const Graph& g = engine.graph();
  TheoremCheck c;
  c.id = "thm_4_3";
  c.hypothesis_holds = true;
  const Diameter diam = complement_diameter(g);
  const bool cond1 = diam.at_least(3);
  const auto tri = small_triangle_remainder(g);
  c.witness = {{"diam_complement", to_json(diam)}, {"condition1", cond1}, {"condition2", tri.has_value()}};
  if (tri) {
    c.witness["triangle"] = to_json(tri->first);
    c.witness["outside_closed_neighborhood"] = to_json(tri->second);
  }
  const bool predicate = cond1 || tri.has_value();
  c.predicted = predicate ? "depth R/I^2 <= 1" : "depth R/I^2 >= 2";
  DepthKind k = engine.classify(2).kind;
  c.verified.push_back({2, to_string(k), kind_at_most_one(k) == predicate, "engine"});
  if (opt.with_oracle) {
    int d = depth_oracle(power(edge_ideal(g), 2), opt.prime);
    c.verified.push_back({2, "depth=" + std::to_string(d), (d <= 1) == predicate, "oracle"});
  }
  return c;
}

TheoremCheck check_remark_2_5(DepthEngine& engine, const CheckOptions& opt) {
  const Graph& g = engine.graph();
  TheoremCheck c;
  c.id = "remark_2_5";
  c.hypothesis_holds = true;
  const Diameter diam = complement_diameter(g);
  const bool far = diam.at_least(3);
  c.witness = {{"diam_complement", to_json(diam)}};
  c.predicted = far ? "depth R/I^(2) = 1" : "depth R/I^(2) >= 2";
  DepthKind k = engine.classify_symbolic(2).kind;
  c.verified.push_back({2, to_string(k), (k == DepthKind::One) == far, "engine"});
  if (far) {
    bool pair = disjoint_connected_mis_pair(g).has_value();
    c.verified.push_back({2, flag("pair", pair), pair, "pair exists"});
  }
  if (opt.with_oracle) {
    int d = depth_oracle(symbolic_power_generators(g, 2), opt.prime);
    c.verified.push_back({2, "depth=" + std::to_string(d), (d == 1) == far, "oracle"});
  }
  return c;
}

std::vector<TheoremCheck> check_decrease_theorems(DepthEngine& engine, const CheckOptions& opt) {
  const Graph& g = engine.graph();
  const std::vector<std::string> ids{"thm_4_2", "thm_4_4", "thm_4_8", "lemma_1_5",
                                     "prop_diam3_cube", "prop_triangle_fifth"};
  std::vector<TheoremCheck> out;
  if (!connected_non_bipartite(g)) {
    for (const auto& id : ids) out.push_back(inapplicable(id, "not connected non-bipartite"));
    return out;
  }

  TheoremCheck t42;
  t42.id = "thm_4_2";
  t42.predicted = "depth R/I^2 = 0";
  t42.hypothesis_holds = engine.classify(1).kind == DepthKind::One;
  if (t42.hypothesis_holds) verify_depth_zero_from(engine, t42, 2, 2);
  out.push_back(std::move(t42));

  TheoremCheck t44;
  t44.id = "thm_4_4";
  t44.predicted = "depth R/I^5 = 0";
  t44.hypothesis_holds = engine.classify(2).kind == DepthKind::One;
  if (t44.hypothesis_holds) {
    verify_depth_zero_from(engine, t44, 5, 5);
    auto s = engine.s_invariant();
    t44.notes["first_zero"] = s ? Json(s->value + 1) : Json(nullptr);
    t44.notes["sharp"] = s && s->value + 1 == 5;
  }
  out.push_back(std::move(t44));

  TheoremCheck t48;
  t48.id = "thm_4_8";
  t48.predicted = "depth R/I^(t+3) = 0 whenever depth R_v/I_v^t = 0";
  Json hits = Json::array();
  for (int v = 0; v < g.order(); ++v) {
    const bool degenerate = g.closed_neighborhood(v) == g.vertices();
    for (int t = 1; t <= opt.t_max; ++t) {
      Decision local = engine.localized_depth_zero(v, t);
      if (!degenerate && !local.holds) continue;
      bool z = engine.depth_zero(t + 3).holds;
      std::string detail = "v=" + label(v) + (degenerate ? " maximal_neighborhood" : "");
      t48.verified.push_back({t + 3, flag("zero", z), z, detail});
      if (hits.size() < 16) hits.push_back({{"v", v + 1}, {"t", t}, {"maximal_neighborhood", degenerate}});
    }
  }
  t48.hypothesis_holds = !t48.verified.empty();
  t48.witness = hits;
  out.push_back(std::move(t48));

  // triangle C plus a path leaving C at one vertex, dominating together
  TheoremCheck l15;
  l15.id = "lemma_1_5";
  std::optional<int> best;
  Json best_witness;
  for (VertexSet c : triangles(g)) {
    std::vector<int> path;
    auto extend = [&](auto&& self, VertexSet used, int length) -> void {
      if (is_dominating(g, used) && (!best || length < *best)) {
        best = length;
        best_witness = {{"triangle", to_json(c)}, {"path", vertex_sequence(path)}, {"s", length}};
      }
      for (int w : g.neighbors(path.back()) - used) {
        path.push_back(w);
        VertexSet next = used;
        next.insert(w);
        self(self, next, length + 1);
        path.pop_back();
      }
    };
    for (int start : c) {
      path = {start};
      extend(extend, c, 0);
    }
  }
  l15.hypothesis_holds = best.has_value();
  if (best) {
    l15.witness = best_witness;
    l15.predicted = "depth R/I^t = 0 for t >= " + std::to_string(*best + 2);
    verify_depth_zero_from(engine, l15, *best + 2, opt.t_max);
    auto s = engine.s_invariant();
    l15.notes["s_invariant_bound_holds"] = s && s->value <= *best + 1;
  }
  out.push_back(std::move(l15));

  TheoremCheck p3;
  p3.id = "prop_diam3_cube";
  p3.predicted = "depth R/I^3 = 0";
  p3.hypothesis_holds = complement_diameter(g).at_least(3);
  p3.witness = {{"diam_complement", to_json(complement_diameter(g))}};
  if (p3.hypothesis_holds) verify_depth_zero_from(engine, p3, 3, 3);
  out.push_back(std::move(p3));

  TheoremCheck p5;
  p5.id = "prop_triangle_fifth";
  p5.predicted = "depth R/I^5 = 0";
  auto tri = small_triangle_remainder(g);
  p5.hypothesis_holds = tri.has_value();
  if (tri) {
    p5.witness = {{"triangle", to_json(tri->first)}, {"outside_closed_neighborhood", to_json(tri->second)}};
    verify_depth_zero_from(engine, p5, 5, 5);
  }
  out.push_back(std::move(p5));
  return out;
}

std::vector<TheoremCheck> check_persistence_props(DepthEngine& engine, const CheckOptions& opt) {
  const Graph& g = engine.graph();
  std::vector<TheoremCheck> out;

  TheoremCheck c12;
  c12.id = "cor_1_2";
  c12.predicted = "depth R/I^t = 0 implies depth R/I^(t+1) = 0";
  for (int t = 1; t < opt.t_max; ++t) {
    if (!engine.depth_zero(t).holds) continue;
    bool z = engine.depth_zero(t + 1).holds;
    c12.verified.push_back({t + 1, flag("zero", z), z, ""});
  }
  c12.hypothesis_holds = !c12.verified.empty();
  out.push_back(std::move(c12));

  TheoremCheck p31;
  p31.id = "prop_3_1";
  p31.predicted = "depth R_v/I_v^t = 0 implies depth R_v/I_v^(t+1) = 0";
  for (int v = 0; v < g.order(); ++v) {
    for (int t = 1; t < opt.t_max; ++t) {
      if (!engine.localized_depth_zero(v, t).holds) continue;
      bool z = engine.localized_depth_zero(v, t + 1).holds;
      p31.verified.push_back({t + 1, flag("zero", z), z, "v=" + label(v)});
    }
  }
  p31.hypothesis_holds = !p31.verified.empty();
  out.push_back(std::move(p31));

  TheoremCheck p32;
  p32.id = "prop_3_2";
  p32.predicted = "components of a disconnected Delta_a(I^t) joined by an edge uv give a disconnected Delta_{a+e_u+e_v}(I^(t+1))";
  TheoremCheck r33;
  r33.id = "remark_3_3";
  r33.predicted = "a facet that is a maximal independent set makes the components adjacent";
  const auto& mis = engine.maximal_independent();
  Json p32_witness = nullptr;
  for (int t = 1; t < opt.t_max; ++t) {
    std::vector<std::pair<Monomial, std::vector<VertexSet>>> found;
    engine.for_each_disconnecting_vector(t, [&](const Monomial& a, const std::vector<VertexSet>& comps) {
      found.emplace_back(a, comps);
      return static_cast<int>(found.size()) < opt.max_vectors;
    });
    int stepped = 0, ok = 0, non_adjacent = 0, with_mis = 0, mis_ok = 0;
    for (const auto& [a, comps] : found) {
      std::optional<std::pair<int, int>> bridge;
      for (auto [u, v] : g.edges()) {
        auto side = [&](int x) {
          for (std::size_t i = 0; i < comps.size(); ++i) {
            if (comps[i].contains(x)) return static_cast<int>(i);
          }
          return -1;
        };
        int su = side(u), sv = side(v);
        if (su >= 0 && sv >= 0 && su != sv) {
          bridge = std::pair{u, v};
          break;
        }
      }
      const SimplicialComplex delta = engine.ordinary_degree_complex(a, t);
      const bool has_mis_facet = std::any_of(delta.facets().begin(), delta.facets().end(), [&](VertexSet f) {
        return std::find(mis.begin(), mis.end(), f) != mis.end();
      });
      if (has_mis_facet) {
        ++with_mis;
        if (bridge) ++mis_ok;
      }
      if (!bridge) {
        ++non_adjacent;
        continue;
      }
      ++stepped;
      auto e = a.exponents();
      ++e[bridge->first];
      ++e[bridge->second];
      const Monomial b(e);
      const SimplicialComplex next = engine.ordinary_degree_complex(b, t + 1);
      bool sub = std::all_of(next.facets().begin(), next.facets().end(),
                             [&](VertexSet f) { return delta.contains(f); });
      bool good = sub && is_disconnected(next) && next.contains(VertexSet::single(bridge->first)) &&
                  next.contains(VertexSet::single(bridge->second));
      if (good) ++ok;
      if (p32_witness.is_null()) {
        p32_witness = {{"t", t}, {"a", to_json(a)}, {"edge", {bridge->first + 1, bridge->second + 1}},
                       {"b", to_json(b)}, {"components_b", to_json(next.components())}};
      }
    }
    if (stepped > 0) {
      p32.verified.push_back({t + 1, "stepped=" + std::to_string(stepped) + " disconnected=" + std::to_string(ok),
                              ok == stepped, "non_adjacent=" + std::to_string(non_adjacent)});
    }
    if (with_mis > 0) {
      r33.verified.push_back({t, "with_mis_facet=" + std::to_string(with_mis) + " adjacent=" + std::to_string(mis_ok),
                              mis_ok == with_mis, ""});
    }
  }
  p32.hypothesis_holds = !p32.verified.empty();
  p32.witness = p32_witness;
  r33.hypothesis_holds = !r33.verified.empty();
  out.push_back(std::move(p32));
  out.push_back(std::move(r33));

  if (!connected_non_bipartite(g) || !has_only_dominating_odd_cycles(g)) {
    out.push_back(inapplicable("thm_3_4", "needs a connected non-bipartite graph whose odd cycles all dominate"));
  } else {
    TheoremCheck t34;
    t34.id = "thm_3_4";
    t34.predicted = "H1 != 0 at t implies H1 != 0 at t+1";
    for (int t = 1; t < opt.t_max; ++t) {
      if (!engine.h1_nonzero(t).holds) continue;
      bool h = engine.h1_nonzero(t + 1).holds;
      t34.verified.push_back({t + 1, flag("h1", h), h, ""});
    }
    t34.hypothesis_holds = !t34.verified.empty();
    out.push_back(std::move(t34));
  }

  if (!is_connected(g)) {
    out.push_back(inapplicable("thm_3_5", "not connected"));
  } else {
    TheoremCheck t35;
    t35.id = "thm_3_5";
    t35.predicted = "depth R/I^(t) = 1 implies depth R/I^(t+1) = 1";
    for (int t = 1; t < opt.t_max; ++t) {
      if (!engine.symbolic_depth_one(t).holds) continue;
      bool h = engine.symbolic_depth_one(t + 1).holds;
      t35.verified.push_back({t + 1, flag("one", h), h, ""});
    }
    t35.hypothesis_holds = !t35.verified.empty();
    out.push_back(std::move(t35));
  }
  return out;
}

std::vector<TheoremCheck> check_all(DepthEngine& engine, const CheckOptions& opt) {
  std::vector<TheoremCheck> out;
  out.push_back(check_thm_2_1(engine, opt));
  for (auto& c : check_thm_2_4_and_2_6(engine, opt)) out.push_back(std::move(c));
  out.push_back(check_remark_2_5(engine, opt));
  out.push_back(check_prop_4_1(engine, opt));
  out.push_back(check_thm_4_3(engine, opt));
  for (auto& c : check_decrease_theorems(engine, opt)) out.push_back(std::move(c));
  for (auto& c : check_persistence_props(engine, opt)) out.push_back(std::move(c));
  return out;
}

Json to_json(const TheoremCheck& c) {
  Json points = Json::array();
  for (const auto& p : c.verified) {
    Json j{{"t", p.t}, {"engine", p.engine}, {"consistent", p.consistent}};
    if (!p.detail.empty()) j["detail"] = p.detail;
    points.push_back(j);
  }
  return {{"id", c.id},          {"hypothesis_holds", c.hypothesis_holds}, {"witness", c.witness},
          {"predicted", c.predicted}, {"verified", points}, {"consistent", c.consistent()},
          {"notes", c.notes}};
}

}  // namespace edgedepth
