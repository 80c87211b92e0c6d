#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edgedepth/catalog.hpp"
#include "edgedepth/named.hpp"
#include "edgedepth/report.hpp"

namespace py = pybind11;
using namespace edgedepth;

namespace {

std::vector<std::pair<int, int>> labeled_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges()) out.emplace_back(u + 1, v + 1);
  return out;
}

AnalyzeOptions options(int t_max, bool with_oracle, std::uint32_t prime) {
  AnalyzeOptions o;
  o.t_max = t_max;
  o.with_oracle = with_oracle;
  o.prime = prime;
  return o;
}

}  // namespace

PYBIND11_MODULE(_edgedepth, m) {
  m.doc() = "Depth of powers of edge ideals";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Graph::from_labeled_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges"), "Graph on vertices 1..n from 1-based edges.")
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("edges", &labeled_edges)
      .def_property_readonly("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph(graph6='" + to_graph6(g) + "')"; });

  auto named_m = m.def_submodule("named");
  named_m.def("complete", &named::complete);
  named_m.def("cycle", &named::cycle);
  named_m.def("path", &named::path);
  named_m.def("star", &named::star);
  named_m.def("triangle_with_tail", &named::triangle_with_tail);
  named_m.def("cone_with_pendant", &named::cone_with_pendant);
  named_m.def("triangle_with_fork", &named::triangle_with_fork);

  m.def("depth_zero", [](const Graph& g, int t) { return depth_zero(g, t).holds; });
  m.def("h1_nonzero", [](const Graph& g, int t) { return h1_nonzero(g, t).holds; });
  m.def("localized_depth_zero",
        [](const Graph& g, int v, int t) { return localized_depth_zero(g, v - 1, t).holds; },
        py::arg("g"), py::arg("v"), py::arg("t"), "v is a 1-based label.");
  m.def("symbolic_depth_one", [](const Graph& g, int t) { return symbolic_depth_one(g, t).holds; });
  m.def("s_invariant", [](const Graph& g) { return s_invariant(g).value; });
  m.def("phi_star", [](const Graph& g) { return phi_star(g).value; });
  m.def("mu_star", [](const Graph& g) { return mu_star(g); });
  m.def("depth_oracle", [](const Graph& g, int t, std::uint32_t prime) {
    return depth_oracle(power(edge_ideal(g), t), prime);
  }, py::arg("g"), py::arg("t"), py::arg("prime") = kDefaultPrime);

  m.def("_profile", [](const Graph& g, int t_max, bool with_oracle, std::uint32_t prime) {
    py::gil_scoped_release release;
    return to_json(depth_profile(g, t_max, with_oracle, prime)).dump();
  });
  m.def("_analyze", [](const Graph& g, int t_max, bool with_oracle, std::uint32_t prime) {
    py::gil_scoped_release release;
    return analyze(g, options(t_max, with_oracle, prime)).dump();
  });
  m.def("_check_theorems", [](const Graph& g, int t_max, bool with_oracle, std::uint32_t prime) {
    py::gil_scoped_release release;
    return check_entry(g, options(t_max, with_oracle, prime)).dump();
  });
  m.def("_search_conjectures", [](const std::vector<Graph>& graphs, int t_max, int jobs) {
    py::gil_scoped_release release;
    Json results = Json::array();
    for (const auto& r : run_conjecture_search(graphs, t_max, jobs)) results.push_back(to_json(r));
    return document("conjecture-search", {{"t_max", t_max}, {"catalog_size", graphs.size()}}, results).dump();
  });
  m.def("_verify_report", [](const std::string& doc) {
    VerifyResult r = verify_report(Json::parse(doc));
    return std::make_pair(r.checked, r.failures);
  });
  m.def("generate_connected_graphs", &generate_connected_graphs, py::arg("n"),
        py::arg("non_bipartite_only") = false);
  m.def("_document", [](const std::string& kind, const std::string& params, const std::string& results) {
    return document(kind, Json::parse(params), Json::parse(results)).dump();
  });
}
