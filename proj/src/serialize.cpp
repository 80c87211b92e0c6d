#include "edgedepth/serialize.hpp"

namespace edgedepth {

Json to_json(VertexSet s) { return Json(s.labels()); }

Json to_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(to_json(s));
  return out;
}

Json to_json(const Monomial& m) { return Json(m.exponents()); }

Json to_json(Diameter d) {
  if (d.is_infinite()) return "INFINITE";
  return d.value();
}

Json vertex_sequence(const std::vector<int>& vertices) {
  Json out = Json::array();
  for (int v : vertices) out.push_back(v + 1);
  return out;
}

Json to_json(const EarDecomposition& ears) {
  Json walks = Json::array();
  for (const auto& w : ears.walks) {
    walks.push_back({{"kind", w.kind == WalkKind::Closed ? "CLOSED" : "OPEN"},
                     {"vertices", vertex_sequence(w.vertices)}});
  }
  return {{"walks", walks}, {"even_walks", ears.even_walk_count}, {"covered", to_json(ears.covered)}};
}

namespace {

struct WitnessJson {
  Json operator()(std::monostate) const { return nullptr; }
  Json operator()(const witness::DominatingSet& w) const {
    return {{"type", "DOMINATING_SET"}, {"U", to_json(w.u)}, {"mu", w.mu}};
  }
  Json operator()(const witness::Socle& w) const {
    return {{"type", "SOCLE_MONOMIAL"}, {"a", to_json(w.a)}};
  }
  Json operator()(const witness::LocalizedVertex& w) const {
    Json j{{"type", w.maximal_neighborhood ? "MAXIMAL_NEIGHBORHOOD" : "LOCALIZED_VERTEX"},
           {"v", w.v + 1}};
    if (!w.maximal_neighborhood) {
      j["U"] = to_json(w.inner);
      j["mu"] = w.mu;
    }
    return j;
  }
  Json operator()(const witness::DisconnectingVector& w) const {
    return {{"type", "DISCONNECTING_VECTOR"}, {"a", to_json(w.a)}, {"components", to_json(w.components)}};
  }
  Json operator()(const witness::MisPair& w) const {
    return {{"type", "MIS_PAIR"}, {"F", to_json(w.f)}, {"G", to_json(w.g)}};
  }
};

}  // namespace

Json to_json(const Witness& w) { return std::visit(WitnessJson{}, w); }

Json to_json(const DepthClass& c) {
  Json j{{"class", to_string(c.kind)}, {"witness", to_json(c.witness)}};
  j["depth"] = c.exact_depth ? Json(*c.exact_depth) : Json(nullptr);
  if (c.oracle_consistent) j["oracle_consistent"] = *c.oracle_consistent;
  return j;
}

Json to_json(const DepthProfile& p) {
  Json ord = Json::array(), sym = Json::array();
  for (std::size_t i = 0; i < p.ordinary.size(); ++i) {
    Json o = to_json(p.ordinary[i]);
    o["t"] = i + 1;
    ord.push_back(o);
    Json s = to_json(p.symbolic[i]);
    s["t"] = i + 1;
    sym.push_back(s);
  }
  return {{"t_max", p.t_max}, {"ordinary", ord}, {"symbolic", sym}};
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", g.order()}, {"edges", edges}};
}

VertexSet vertex_set_from_json(const Json& j) {
  return VertexSet::from_labels(j.get<std::vector<int>>());
}

Monomial monomial_from_json(const Json& j) { return Monomial(j.get<std::vector<int>>()); }

Graph graph_from_json(const Json& j) {
  std::vector<Graph::Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph::from_labeled_edges(j.at("n").get<int>(), edges);
}

}  // namespace edgedepth
