#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "edgedepth/complex.hpp"
#include "edgedepth/ear.hpp"
#include "edgedepth/graph.hpp"
#include "edgedepth/homology.hpp"
#include "edgedepth/monomial.hpp"

namespace edgedepth {

enum class DepthKind { Zero, One, AtLeastTwo };

/// "ZERO", "ONE", "GEQ2".
std::string to_string(DepthKind kind);

namespace witness {

/// U dominating, Gamma_U strongly non-bipartite with mu*(Gamma_U) = mu < t.
struct DominatingSet {
  VertexSet u;
  int mu = 0;
};
/// x^a not in J and x_i x^a in J for every i.
struct Socle {
  Monomial a;
};
/// depth R_v/I_v^t = 0, either because N[v] = V or through a dominating set
/// `inner` of Gamma_{V \ N[v]} with mu*(Gamma_inner) = mu < t.
struct LocalizedVertex {
  int v = 0;
  bool maximal_neighborhood = false;
  VertexSet inner;
  int mu = 0;
};
/// Delta_a is disconnected; components lists the vertex sets of its
/// connected components.
struct DisconnectingVector {
  Monomial a;
  std::vector<VertexSet> components;
};
struct MisPair {
  VertexSet f;
  VertexSet g;
};

}  // namespace witness

using Witness = std::variant<std::monostate, witness::DominatingSet, witness::Socle,
                             witness::LocalizedVertex, witness::DisconnectingVector,
                             witness::MisPair>;

struct Decision {
  bool holds = false;
  Witness witness;
};

struct DepthClass {
  DepthKind kind = DepthKind::AtLeastTwo;
  std::optional<int> exact_depth;
  Witness witness;
  /// Set when the homology oracle ran.
  std::optional<bool> oracle_consistent;
};

struct DepthProfile {
  int t_max = 0;
  /// Entry t - 1 describes I^t, respectively I^(t).
  std::vector<DepthClass> ordinary;
  std::vector<DepthClass> symbolic;
};

/// Decision procedures for one graph. Ear-decomposition results and the
/// edge-multiset table are cached, so long-lived engines answer repeated
/// queries cheaply. Not safe for concurrent use; give each worker its own.
class DepthEngine {
 public:
  using DisconnectingVisitor =
      std::function<bool(const Monomial& a, const std::vector<VertexSet>& components)>;

  explicit DepthEngine(Graph g);

  const Graph& graph() const { return g_; }
  EarSolver& solver() { return solver_; }
  const std::vector<VertexSet>& maximal_independent() const { return mis_; }
  std::optional<SInvariantResult> s_invariant() { return solver_.s_invariant(); }

  /// depth R/I^t = 0, witnessed by a minimizing dominating set.
  Decision depth_zero(int t);
  /// depth S/J^t = 0 for the edge ideal J of Gamma_{V \ N[v]}. The case
  /// N[v] = V is left to the caller and reported as false here.
  Decision localized_depth_zero(int v, int t);
  /// H^1_m(R/I^t) != 0.
  Decision h1_nonzero(int t);
  /// H^1_m(R/I^(t)) != 0, equivalently depth R/I^(t) = 1.
  Decision symbolic_h1_nonzero(int t);
  /// Same as symbolic_h1_nonzero; throws GraphError for disconnected graphs.
  Decision symbolic_depth_one(int t);

  /// Visits every a in {0..t}^n with Delta_a(I^t) disconnected, in
  /// lexicographic order, until the visitor returns false.
  void for_each_disconnecting_vector(int t, const DisconnectingVisitor& visit);
  void for_each_symbolic_disconnecting_vector(int t, const DisconnectingVisitor& visit) const;
  std::optional<witness::DisconnectingVector> disconnecting_vector(int t);
  std::optional<witness::DisconnectingVector> symbolic_disconnecting_vector(int t) const;

  /// Delta_a(I^t) from the edge-multiset table.
  SimplicialComplex ordinary_degree_complex(const Monomial& a, int t);

  DepthClass classify(int t);
  DepthClass classify_symbolic(int t);
  DepthProfile profile(int t_max, bool with_oracle = false, std::uint32_t prime = kDefaultPrime);

 private:
  const EdgeMatchingTable& table(int t);
  Decision compute_h1(int t);
  Decision compute_symbolic_h1(int t) const;

  Graph g_;
  EarSolver solver_;
  std::vector<VertexSet> mis_;
  std::unique_ptr<EdgeMatchingTable> table_;
  std::map<int, Decision> h1_cache_;
  std::map<int, Decision> symbolic_cache_;
};

Decision depth_zero(const Graph& g, int t);
Decision h1_nonzero(const Graph& g, int t);
Decision localized_depth_zero(const Graph& g, int v, int t);
Decision symbolic_depth_one(const Graph& g, int t);
DepthProfile depth_profile(const Graph& g, int t_max, bool with_oracle = false,
                           std::uint32_t prime = kDefaultPrime);

}  // namespace edgedepth
