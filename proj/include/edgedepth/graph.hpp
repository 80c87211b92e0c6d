#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgedepth/vertex_set.hpp"

namespace edgedepth {

/// Raised for malformed graphs and violated operation preconditions.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 (labels 1..n in every text
/// format). Immutable after construction.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;

  /// Rejects loops, duplicate edges, out-of-range endpoints and isolated
  /// vertices. Endpoints are 0-based.
  static Graph from_edges(int n, const std::vector<Edge>& edges);
  /// Same as from_edges with 1-based endpoints.
  static Graph from_labeled_edges(int n, const std::vector<Edge>& edges);
  /// Like from_edges but isolated vertices are permitted. Induced subgraphs
  /// and complements are built this way.
  static Graph with_isolated(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Edges (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighborhood(int v) const {
    return VertexSet(adj_[v] | (1u << v));
  }
  bool adjacent(int u, int v) const { return ((adj_[u] >> v) & 1u) != 0; }
  int degree(int v) const { return neighbors(v).size(); }
  bool has_isolated_vertices() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  static Graph build(int n, const std::vector<Edge>& edges, bool allow_isolated);

  int n_ = 0;
  std::vector<std::uint32_t> adj_;
  std::vector<Edge> edges_;
};

struct InducedSubgraph {
  Graph graph;
  /// vertices[i] is the vertex of the parent graph that became vertex i.
  std::vector<int> vertices;
};

/// Subgraph induced on u, relabeled in increasing vertex order. Isolated
/// vertices are kept.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet u);

/// Connected components of the subgraph induced on scope, ordered by their
/// smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet scope);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g, VertexSet scope);
bool is_connected(const Graph& g);

struct BipartiteResult {
  bool bipartite = true;
  /// One odd cycle as a vertex sequence (first vertex not repeated) when the
  /// graph is not bipartite.
  std::vector<int> odd_cycle;
};

BipartiteResult is_bipartite(const Graph& g);
BipartiteResult is_bipartite(const Graph& g, VertexSet scope);

/// Every connected component of the subgraph induced on scope contains an
/// odd cycle. Isolated vertices are bipartite components.
bool is_strongly_non_bipartite(const Graph& g, VertexSet scope);
bool is_strongly_non_bipartite(const Graph& g);

bool is_dominating(const Graph& g, VertexSet u);
VertexSet neighborhood(const Graph& g, int v);
VertexSet closed_neighborhood(const Graph& g, int v);
/// N[U]: U together with every vertex adjacent to U.
VertexSet closed_neighborhood(const Graph& g, VertexSet u);
bool is_independent(const Graph& g, VertexSet u);

/// All inclusion-maximal independent sets, in canonical order.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
/// All independent sets including the empty one, in canonical order.
std::vector<VertexSet> independent_sets(const Graph& g);

/// Disjoint maximal independent sets F, G whose union induces a connected
/// subgraph, minimizing |F| + |G|; ties broken lexicographically on (F, G)
/// with F before G canonically.
std::optional<std::pair<VertexSet, VertexSet>> disjoint_connected_mis_pair(
    const Graph& g);

Graph complement_graph(const Graph& g);

/// Graph distance bound that may be infinite. Infinite compares greater
/// than every finite value.
class Diameter {
 public:
  static constexpr Diameter infinite() { return Diameter(-1); }
  static constexpr Diameter finite(int d) { return Diameter(d); }
  constexpr bool is_infinite() const { return value_ < 0; }
  /// Only meaningful when finite.
  constexpr int value() const { return value_; }
  constexpr bool at_least(int d) const { return is_infinite() || value_ >= d; }
  std::string to_string() const;
  friend constexpr bool operator==(Diameter, Diameter) = default;
  friend constexpr std::strong_ordering operator<=>(Diameter a, Diameter b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return a.value_ <=> b.value_;
  }

 private:
  constexpr explicit Diameter(int v) : value_(v) {}
  int value_;
};

Diameter diameter(const Graph& g);
Diameter complement_diameter(const Graph& g);

/// All simple odd cycles, each reported once up to rotation and reflection,
/// starting at its smallest vertex.
std::vector<std::vector<int>> odd_cycles(const Graph& g);
bool is_dominating_cycle(const Graph& g, const std::vector<int>& cycle);

/// flags[S] != 0 iff the vertex set S (bitmask) carries a simple cycle of odd
/// length |S| >= 3 in g. Requires n <= 20.
std::vector<std::uint8_t> odd_cycle_vertex_sets(const Graph& g);

/// Every odd cycle of g is a dominating set.
bool has_only_dominating_odd_cycles(const Graph& g);

}  // namespace edgedepth
