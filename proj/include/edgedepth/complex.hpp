#pragma once

#include <optional>
#include <vector>

#include "edgedepth/graph.hpp"
#include "edgedepth/monomial.hpp"
#include "edgedepth/vertex_set.hpp"

namespace edgedepth {

/// Simplicial complex on {0..n-1} given by its facets. The void complex has
/// no faces at all; the irrelevant complex has only the empty face.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex irrelevant(int n) { return SimplicialComplex(n, {VertexSet()}); }
  /// Non-maximal sets are dropped; facets end up in canonical order.
  SimplicialComplex(int n, std::vector<VertexSet> facets);

  int nvars() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }
  bool contains(VertexSet face) const;
  /// -1 for the irrelevant complex, -2 for the void one.
  int dimension() const;
  /// Every face, the empty face included, in canonical order.
  std::vector<VertexSet> faces() const;
  /// Vertex sets of the connected components, in canonical order.
  std::vector<VertexSet> components() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_;
  std::vector<VertexSet> facets_;
};

/// Delta_a(J) = {F : x^a not in J R[x_i^{-1} | i in F]}.
SimplicialComplex degree_complex(const MonomialIdeal& j, const Monomial& a);

/// At least two facets and the facet overlap graph is disconnected.
bool is_disconnected(const SimplicialComplex& c);

/// Maximal independent sets F with sum over i not in F of a_i < t.
std::vector<VertexSet> symbolic_facets(const std::vector<VertexSet>& maximal_independent,
                                       const Monomial& a, int t);
std::vector<VertexSet> symbolic_facets(const Graph& g, const Monomial& a, int t);

struct AssociatedPrimeAudit {
  bool confirmed = false;
  /// m with (I^t : m) = P_F.
  std::optional<Monomial> witness;
  int cap = 0;
};

/// Looks for m in {0..cap}^n with (I^t : m) = P_F. cap defaults to t.
AssociatedPrimeAudit facet_prime_is_associated(const Graph& g, int t, VertexSet f,
                                               std::optional<int> cap = std::nullopt);

/// The lexicographically least a supported on F u G with sum_F a = sum_G a =
/// t - 1 for which F and G are the only facets of Delta_a(I^(t)). Throws
/// GraphError unless F, G are disjoint maximal independent sets with
/// Gamma_{F u G} connected and t >= 1.
std::optional<Monomial> find_disconnecting_vector(const Graph& g, VertexSet f, VertexSet g2,
                                                  int t);

}  // namespace edgedepth
