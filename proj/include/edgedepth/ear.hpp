#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "edgedepth/graph.hpp"

namespace edgedepth {

enum class WalkKind { Closed, Open };

/// A walk v0, ..., vk without repeated vertices except possibly v0 == vk:
/// a path, a cycle, or a repetitive edge u, w, u.
struct Walk {
  std::vector<int> vertices;
  WalkKind kind = WalkKind::Open;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool is_even() const { return length() % 2 == 0; }
};

/// Odd-beginning generalized ear decomposition of one connected component.
struct EarDecomposition {
  std::vector<Walk> walks;
  int even_walk_count = 0;
  VertexSet covered;
};

/// Returns a description of the first violated condition, or nullopt when
/// `ears` is an odd-beginning generalized ear decomposition of the connected
/// subgraph induced on `component`.
std::optional<std::string> validate_ear_decomposition(const Graph& g, VertexSet component,
                                                      const EarDecomposition& ears);

struct PhiStarResult {
  int value = 0;
  /// One optimal decomposition per connected component.
  std::vector<EarDecomposition> witnesses;
};

struct SInvariantResult {
  int value = 0;
  VertexSet witness;
};

/// Exact phi*, mu* and s for one graph. Results for induced subgraphs are
/// memoized, so one solver should serve every query on the same graph.
///
/// The minimum even-walk count is found by a memoized search over covered
/// vertex sets. Ears whose interior has an odd number k >= 3 of new vertices
/// are never needed: such an ear costs one even walk, exactly like a
/// repetitive edge onto its first interior vertex followed by the remaining
/// k - 1 vertices as an odd path. So the moves are a repetitive edge onto one
/// new vertex (cost 1) and a path through an even number of new vertices
/// (cost 0).
class EarSolver {
 public:
  explicit EarSolver(Graph g);

  const Graph& graph() const { return g_; }

  /// phi* of the connected induced subgraph on component; nullopt when that
  /// subgraph is bipartite.
  std::optional<int> phi_star_component(VertexSet component);
  /// An optimal decomposition; throws GraphError if component is bipartite.
  EarDecomposition decomposition(VertexSet component);
  /// mu*(Gamma_U); nullopt unless Gamma_U is strongly non-bipartite.
  std::optional<int> mu_star_on(VertexSet u);
  /// s(Gamma) with the canonically smallest minimizing dominating set;
  /// nullopt when no dominating set induces a strongly non-bipartite graph.
  std::optional<SInvariantResult> s_invariant_on(VertexSet scope);
  std::optional<SInvariantResult> s_invariant();

 private:
  int cost(VertexSet component, VertexSet covered);
  std::vector<VertexSet> even_ears(VertexSet component, VertexSet covered) const;

  Graph g_;
  std::vector<std::uint8_t> odd_cycle_sets_;
  struct Entry {
    std::int8_t cost;
    std::uint32_t ear;  // new vertices added by the best move
  };
  std::unordered_map<std::uint64_t, Entry> memo_;
  std::unordered_map<std::uint32_t, std::optional<int>> phi_cache_;
  std::unordered_map<std::uint32_t, std::optional<SInvariantResult>> s_cache_;
};

/// Throws GraphError unless g is strongly non-bipartite.
PhiStarResult phi_star(const Graph& g);
int mu_star(const Graph& g);
/// Throws GraphError when no dominating set induces a strongly non-bipartite
/// subgraph (in particular for bipartite graphs).
SInvariantResult s_invariant(const Graph& g);

/// mu*(Gamma_{U+v}) <= mu*(Gamma_U) + 1. Throws GraphError unless Gamma_U is
/// strongly non-bipartite and v lies outside U with a neighbor in U.
bool mu_star_extension_bound_check(const Graph& g, VertexSet u, int v);

}  // namespace edgedepth
