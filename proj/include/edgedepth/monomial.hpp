#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgedepth/graph.hpp"
#include "edgedepth/vertex_set.hpp"

namespace edgedepth {

/// x^a for an exponent vector a in N^n; variable i belongs to vertex i.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int nvars, int i);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int operator[](int i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const;
  VertexSet support() const;
  bool divides(const Monomial& other) const;
  /// Coordinatewise min(a_i, cap).
  Monomial capped(int cap) const;
  /// Exponents of variables in `inverted` set to zero.
  Monomial restricted_away_from(VertexSet inverted) const;
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  /// a / gcd(a, b).
  friend Monomial quotient_by_gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on exponent vectors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<int> exps_;
};

/// Monomial ideal kept as its minimal generating set, sorted
/// lexicographically. An empty generator list is the zero ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
  MonomialIdeal(int nvars, std::vector<Monomial> generators);
  static MonomialIdeal unit(int nvars);
  /// P_F = (x_i : i not in F).
  static MonomialIdeal face_prime(int nvars, VertexSet face);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& m) const;
  /// Largest exponent of any generator, 0 for the zero ideal.
  int max_exponent() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// The exponent box {0..cap}^n with a mixed-radix index. Variable 0 is the
/// most significant digit, so increasing index is lexicographic order.
class ExponentBox {
 public:
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 27;

  ExponentBox(int nvars, int cap);
  int nvars() const { return nvars_; }
  int cap() const { return cap_; }
  std::size_t size() const { return size_; }
  std::size_t stride(int i) const { return strides_[i]; }
  std::size_t index(std::span<const int> a) const;
  std::size_t index(const Monomial& a) const { return index(a.exponents()); }
  Monomial decode(std::size_t index) const;

 private:
  int nvars_;
  int cap_;
  std::size_t size_;
  std::vector<std::size_t> strides_;
};

/// Membership x^a in J for every a in a box, computed from the generators by
/// propagating divisibility. Generators outside the box are ignored, so the
/// table is exact whenever cap >= J.max_exponent() and queries stay in the
/// box. Localized queries use that exponents at the cap behave like
/// inverted variables.
class IdealMembershipTable {
 public:
  IdealMembershipTable(const MonomialIdeal& ideal, int cap);
  const ExponentBox& box() const { return box_; }
  bool contains(std::size_t index) const { return member_[index] != 0; }
  bool contains(const Monomial& a) const;
  /// x^a in J R[x_i^{-1} | i in inverted]; a must lie in the box.
  bool localized_contains(const Monomial& a, VertexSet inverted) const;

 private:
  ExponentBox box_;
  std::vector<std::uint8_t> member_;
};

/// nu(a): the largest number of edges (with repetition) whose vertex
/// multiplicities stay below the capacities a, for every a in {0..cap}^n.
/// x^a lies in I^t exactly when nu(a) >= t.
class EdgeMatchingTable {
 public:
  EdgeMatchingTable(const Graph& g, int cap);
  const ExponentBox& box() const { return box_; }
  int nu(std::size_t index) const { return nu_[index]; }

 private:
  ExponentBox box_;
  std::vector<std::uint8_t> nu_;
};

MonomialIdeal edge_ideal(const Graph& g);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// Minimal generators of J^t; throws std::invalid_argument for t = 0.
MonomialIdeal power(const MonomialIdeal& j, int t);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);

/// nu(a) for a single capacity vector, by direct search.
int max_edge_multiset(const Graph& g, const Monomial& a);
/// x^a in I^t, decided as a capacitated b-matching of size >= t.
bool edge_power_membership(const Graph& g, const Monomial& a, int t);

/// Some minimal generator restricted to V \ F divides x^a restricted to V \ F.
bool localized_membership(const MonomialIdeal& j, const Monomial& a, VertexSet f);

/// For every maximal independent set F, sum over i not in F of a_i >= t.
bool symbolic_membership(const Graph& g, const Monomial& a, int t);
bool symbolic_membership(const std::vector<VertexSet>& maximal_independent, const Monomial& a,
                         int t);
/// Minimal generators of the t-th symbolic power, as the intersection of the
/// t-th powers of P_F over maximal independent sets F.
MonomialIdeal symbolic_power_generators(const Graph& g, int t);

/// Lexicographically least a in {0..cap}^n with x^a not in J and x_i x^a in J
/// for every i.
std::optional<Monomial> socle_witness(const MonomialIdeal& j, int cap);

MonomialIdeal colon_by_variable(const MonomialIdeal& j, int i);
MonomialIdeal colon(const MonomialIdeal& j, const Monomial& m);
/// J : m, m the maximal homogeneous ideal.
MonomialIdeal colon_by_maximal_ideal(const MonomialIdeal& j);
/// J : m^infinity, iterating colon_by_maximal_ideal to its fixpoint.
MonomialIdeal saturation(const MonomialIdeal& j);

}  // namespace edgedepth
