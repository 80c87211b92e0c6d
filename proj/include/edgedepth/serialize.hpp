#pragma once

#include <json.hpp>

#include "edgedepth/depth.hpp"
#include "edgedepth/ear.hpp"
#include "edgedepth/graph.hpp"

namespace edgedepth {

using Json = nlohmann::json;

/// Sorted 1-based labels.
Json to_json(VertexSet s);
Json to_json(const std::vector<VertexSet>& sets);
/// Exponent vector.
Json to_json(const Monomial& m);
/// Integer, or the string "INFINITE".
Json to_json(Diameter d);
/// Vertex sequence in 1-based labels.
Json vertex_sequence(const std::vector<int>& vertices);
Json to_json(const EarDecomposition& ears);
/// Object with a "type" field naming the witness kind; null for none.
Json to_json(const Witness& w);
Json to_json(const DepthClass& c);
Json to_json(const DepthProfile& p);
Json graph_to_json(const Graph& g);

VertexSet vertex_set_from_json(const Json& j);
Monomial monomial_from_json(const Json& j);
Graph graph_from_json(const Json& j);

}  // namespace edgedepth
