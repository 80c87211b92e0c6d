#include "edgedepth/homology.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace edgedepth {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
}

}  // namespace

int rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  require_prime(p);
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t inv = inverse_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const std::uint64_t factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        std::uint64_t sub = factor * rows[rank][k] % p;
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + p - sub) % p);
      }
    }
    ++rank;
  }
  return rank;
}

int ChainComplexRanks::total() const { return std::accumulate(ranks.begin(), ranks.end(), 0); }

ChainComplexRanks reduced_homology(const SimplicialComplex& c, std::uint32_t p) {
  require_prime(p);
  ChainComplexRanks out;
  if (c.is_void()) return out;
  const int top = c.dimension();
  // faces grouped by dimension, index 0 holding the empty face
  std::vector<std::vector<VertexSet>> by_dim(top + 2);
  for (VertexSet f : c.faces()) by_dim[f.size()].push_back(f);
  std::vector<std::unordered_map<std::uint32_t, int>> position(top + 2);
  for (int d = 0; d <= top + 1; ++d) {
    for (std::size_t i = 0; i < by_dim[d].size(); ++i) position[d][by_dim[d][i].bits()] = i;
  }
  // boundary_rank[d]: rank of the map from size-d faces to size-(d-1) faces
  std::vector<int> boundary_rank(top + 3, 0);
  for (int d = 1; d <= top + 1; ++d) {
    std::vector<std::vector<std::uint32_t>> rows(
        by_dim[d].size(), std::vector<std::uint32_t>(by_dim[d - 1].size(), 0));
    for (std::size_t r = 0; r < by_dim[d].size(); ++r) {
      int sign_index = 0;
      for (int v : by_dim[d][r]) {
        VertexSet facet = by_dim[d][r];
        facet.erase(v);
        rows[r][position[d - 1].at(facet.bits())] = (sign_index % 2 == 0) ? 1 : p - 1;
        ++sign_index;
      }
    }
    boundary_rank[d] = rank_mod_p(std::move(rows), p);
  }
  out.ranks.resize(top + 2);
  for (int d = 0; d <= top + 1; ++d) {
    out.ranks[d] = static_cast<int>(by_dim[d].size()) - boundary_rank[d] - boundary_rank[d + 1];
  }
  return out;
}

BettiTable betti_numbers(const MonomialIdeal& j, std::uint32_t p) {
  require_prime(p);
  if (j.is_zero()) throw std::invalid_argument("Betti numbers need a nonzero ideal");
  const int n = j.nvars();
  BettiTable table;
  table[{0, Monomial::one(n)}] = 1;
  if (j.is_unit()) {
    table.clear();
    return table;
  }
  const int cap = j.max_exponent();
  const IdealMembershipTable member(j, cap);
  const ExponentBox& box = member.box();

  // lcm lattice by closure under lcm with single generators
  std::vector<std::uint8_t> in_lattice(box.size(), 0);
  std::deque<Monomial> queue;
  for (const auto& g : j.generators()) {
    auto idx = box.index(g);
    if (!in_lattice[idx]) {
      in_lattice[idx] = 1;
      queue.push_back(g);
    }
  }
  while (!queue.empty()) {
    Monomial x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : j.generators()) {
      Monomial l = lcm(x, g);
      auto idx = box.index(l);
      if (!in_lattice[idx]) {
        in_lattice[idx] = 1;
        queue.push_back(std::move(l));
      }
    }
  }

  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    if (!in_lattice[idx]) continue;
    const Monomial b = box.decode(idx);
    const VertexSet support = b.support();
    std::vector<VertexSet> faces;
    const std::uint32_t s = support.bits();
    for (std::uint32_t f = s;; f = (f - 1) & s) {
      std::size_t shifted = idx;
      for (int v : VertexSet(f)) shifted -= box.stride(v);
      if (member.contains(shifted)) faces.emplace_back(f);
      if (f == 0) break;
    }
    const SimplicialComplex koszul(n, std::move(faces));
    const ChainComplexRanks h = reduced_homology(koszul, p);
    for (int d = -1; d + 1 < static_cast<int>(h.ranks.size()); ++d) {
      if (h.at(d) != 0) table[{d + 2, b}] = h.at(d);
    }
  }
  return table;
}

int projective_dimension(const BettiTable& betti) {
  int pd = 0;
  for (const auto& [key, value] : betti) {
    if (value != 0) pd = std::max(pd, key.first);
  }
  return pd;
}

int depth_oracle(const MonomialIdeal& j, std::uint32_t p) {
  if (j.is_zero() || j.is_unit()) {
    throw std::invalid_argument("depth oracle needs a nonzero proper ideal");
  }
  return j.nvars() - projective_dimension(betti_numbers(j, p));
}

}  // namespace edgedepth
