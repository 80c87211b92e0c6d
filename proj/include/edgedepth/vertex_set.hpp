#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace edgedepth {

inline constexpr int kMaxVertices = 32;

/// A subset of {0, ..., n-1} stored as a bitmask. Vertex v occupies bit v;
/// the 1-based label of vertex v is v + 1.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr VertexSet single(int v) { return VertexSet(1u << v); }
  static VertexSet from_vertices(const std::vector<int>& vertices);
  /// Builds a set from 1-based labels.
  static VertexSet from_labels(std::initializer_list<int> labels);
  static VertexSet from_labels(const std::vector<int>& labels);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return ((bits_ >> v) & 1u) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr void insert(int v) { bits_ |= 1u << v; }
  constexpr void erase(int v) { bits_ &= ~(1u << v); }
  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr VertexSet complement(int n) const {
    return VertexSet(full(n).bits_ & ~bits_);
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> vertices() const;
  std::vector<int> labels() const;
  /// "{1,3,5}" in 1-based labels.
  std::string to_string() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Canonical order on vertex sets: lexicographic on the increasing vertex
/// sequence, a proper prefix sorting first.
bool lex_less(VertexSet a, VertexSet b);

void sort_canonical(std::vector<VertexSet>& sets);

}  // namespace edgedepth
