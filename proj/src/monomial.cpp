#include "edgedepth/monomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace edgedepth {

namespace {

// Keeps the generators no other generator divides. A monomial can only be
// divided by a distinct monomial of strictly smaller degree, so each
// candidate is compared against kept generators of lower degree only.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::stable_sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Monomial> kept;
  std::size_t lower_end = 0;  // kept[0, lower_end) have degree < current
  int current_degree = -1;
  for (auto& g : gens) {
    if (g.degree() != current_degree) {
      current_degree = g.degree();
      lower_end = kept.size();
    }
    bool divisible = false;
    for (std::size_t k = 0; k < lower_end && !divisible; ++k) divisible = kept[k].divides(g);
    if (!divisible) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("ideals live in different rings");
}

// Calls f(digits, index) for every a in {0..cap}^n in lexicographic order,
// where index is the position of a in `box` (whose cap may be larger).
template <class F>
void for_each_in_subbox(const ExponentBox& box, int cap, F&& f) {
  const int n = box.nvars();
  std::vector<int> digits(n, 0);
  std::size_t index = 0;
  while (true) {
    if (!f(digits, index)) return;
    int i = n - 1;
    while (i >= 0 && digits[i] == cap) {
      index -= static_cast<std::size_t>(cap) * box.stride(i);
      digits[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++digits[i];
    index += box.stride(i);
  }
}

}  // namespace

// ---- Monomial ----

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
}

Monomial Monomial::variable(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

VertexSet Monomial::support() const {
  VertexSet s;
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] > 0) s.insert(i);
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::capped(int cap) const {
  Monomial out = *this;
  for (int& e : out.exps_) e = std::min(e, cap);
  return out;
}

Monomial Monomial::restricted_away_from(VertexSet inverted) const {
  Monomial out = *this;
  for (int v : inverted) {
    if (v < nvars()) out.exps_[v] = 0;
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (int i = 0; i < a.nvars(); ++i) out.exps_[i] += b.exps_[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (int i = 0; i < a.nvars(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (int i = 0; i < a.nvars(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial quotient_by_gcd(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (int i = 0; i < a.nvars(); ++i) out.exps_[i] = std::max(0, a.exps_[i] - b.exps_[i]);
  return out;
}

// ---- MonomialIdeal ----

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  for (const auto& g : generators) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator has the wrong variable count");
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(int nvars) { return MonomialIdeal(nvars, {Monomial::one(nvars)}); }

MonomialIdeal MonomialIdeal::face_prime(int nvars, VertexSet face) {
  std::vector<Monomial> gens;
  for (int i = 0; i < nvars; ++i) {
    if (!face.contains(i)) gens.push_back(Monomial::variable(nvars, i));
  }
  return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().degree() == 0; }

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

int MonomialIdeal::max_exponent() const {
  int best = 0;
  for (const auto& g : gens_) {
    for (int e : g.exponents()) best = std::max(best, e);
  }
  return best;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

// ---- ExponentBox ----

ExponentBox::ExponentBox(int nvars, int cap) : nvars_(nvars), cap_(cap), strides_(nvars) {
  if (nvars < 0 || cap < 0) throw std::invalid_argument("invalid exponent box");
  std::size_t size = 1;
  for (int i = nvars - 1; i >= 0; --i) {
    strides_[i] = size;
    size *= static_cast<std::size_t>(cap) + 1;
    if (size > kMaxEntries) throw std::length_error("exponent box too large");
  }
  size_ = size;
}

std::size_t ExponentBox::index(std::span<const int> a) const {
  std::size_t idx = 0;
  for (int i = 0; i < nvars_; ++i) {
    if (a[i] < 0 || a[i] > cap_) throw std::out_of_range("exponent outside the box");
    idx += static_cast<std::size_t>(a[i]) * strides_[i];
  }
  return idx;
}

Monomial ExponentBox::decode(std::size_t index) const {
  std::vector<int> e(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    e[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return Monomial(std::move(e));
}

// ---- membership tables ----

IdealMembershipTable::IdealMembershipTable(const MonomialIdeal& ideal, int cap)
    : box_(ideal.nvars(), cap), member_(box_.size(), 0) {
  for (const auto& g : ideal.generators()) {
    bool inside = std::all_of(g.exponents().begin(), g.exponents().end(),
                              [cap](int e) { return e <= cap; });
    if (inside) member_[box_.index(g)] = 1;
  }
  const int n = box_.nvars();
  for_each_in_subbox(box_, cap, [&](const std::vector<int>& digits, std::size_t idx) {
    if (!member_[idx]) {
      for (int i = 0; i < n; ++i) {
        if (digits[i] > 0 && member_[idx - box_.stride(i)]) {
          member_[idx] = 1;
          break;
        }
      }
    }
    return true;
  });
}

bool IdealMembershipTable::contains(const Monomial& a) const { return contains(box_.index(a)); }

bool IdealMembershipTable::localized_contains(const Monomial& a, VertexSet inverted) const {
  std::size_t idx = box_.index(a);
  for (int v : inverted) {
    idx += static_cast<std::size_t>(box_.cap() - a[v]) * box_.stride(v);
  }
  return contains(idx);
}

EdgeMatchingTable::EdgeMatchingTable(const Graph& g, int cap)
    : box_(g.order(), cap), nu_(box_.size(), 0) {
  const auto& edges = g.edges();
  for_each_in_subbox(box_, cap, [&](const std::vector<int>& d, std::size_t idx) {
    int best = 0;
    for (auto [u, v] : edges) {
      if (d[u] > 0 && d[v] > 0) {
        best = std::max(best, 1 + nu_[idx - box_.stride(u) - box_.stride(v)]);
      }
    }
    nu_[idx] = static_cast<std::uint8_t>(best);
    return true;
  });
}

// ---- ideal operations ----

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) {
    std::vector<int> e(g.order(), 0);
    e[u] = e[v] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(g.order(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) gens.push_back(x * y);
  }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& j, int t) {
  if (t < 1) throw std::invalid_argument("ideal power requires t >= 1");
  MonomialIdeal out = j;
  for (int k = 2; k <= t; ++k) out = product(out, j);
  return out;
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) gens.push_back(lcm(x, y));
  }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

int max_edge_multiset(const Graph& g, const Monomial& a) {
  if (a.nvars() != g.order()) throw std::invalid_argument("capacity vector has the wrong length");
  std::map<std::vector<int>, int> memo;
  const auto& edges = g.edges();
  auto solve = [&](auto&& self, std::vector<int>& cap) -> int {
    if (auto it = memo.find(cap); it != memo.end()) return it->second;
    int best = 0;
    for (auto [u, v] : edges) {
      if (cap[u] > 0 && cap[v] > 0) {
        --cap[u];
        --cap[v];
        best = std::max(best, 1 + self(self, cap));
        ++cap[u];
        ++cap[v];
      }
    }
    memo.emplace(cap, best);
    return best;
  };
  std::vector<int> cap = a.exponents();
  return solve(solve, cap);
}

bool edge_power_membership(const Graph& g, const Monomial& a, int t) {
  if (t <= 0) return true;
  // Any t edges use a vertex at most t times, so exponents above t are slack.
  return max_edge_multiset(g, a.capped(t)) >= t;
}

bool localized_membership(const MonomialIdeal& j, const Monomial& a, VertexSet f) {
  const Monomial target = a.restricted_away_from(f);
  return std::any_of(j.generators().begin(), j.generators().end(), [&](const Monomial& g) {
    return g.restricted_away_from(f).divides(target);
  });
}

bool symbolic_membership(const std::vector<VertexSet>& maximal_independent, const Monomial& a,
                         int t) {
  const int total = a.degree();
  for (VertexSet f : maximal_independent) {
    int inside = 0;
    for (int v : f) inside += a[v];
    if (total - inside < t) return false;
  }
  return true;
}

bool symbolic_membership(const Graph& g, const Monomial& a, int t) {
  return symbolic_membership(maximal_independent_sets(g), a, t);
}

MonomialIdeal symbolic_power_generators(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("symbolic power requires t >= 1");
  const auto mis = maximal_independent_sets(g);
  std::optional<MonomialIdeal> out;
  for (VertexSet f : mis) {
    MonomialIdeal prime_power = power(MonomialIdeal::face_prime(g.order(), f), t);
    out = out ? intersection(*out, prime_power) : prime_power;
  }
  return out ? *out : MonomialIdeal::unit(g.order());
}

std::optional<Monomial> socle_witness(const MonomialIdeal& j, int cap) {
  const IdealMembershipTable table(j, cap + 1);
  const ExponentBox& box = table.box();
  const int n = j.nvars();
  std::optional<Monomial> found;
  for_each_in_subbox(box, cap, [&](const std::vector<int>& digits, std::size_t idx) {
    if (table.contains(idx)) return true;
    for (int i = 0; i < n; ++i) {
      if (!table.contains(idx + box.stride(i))) return true;
    }
    found = Monomial(digits);
    return false;
  });
  return found;
}

MonomialIdeal colon_by_variable(const MonomialIdeal& j, int i) {
  return colon(j, Monomial::variable(j.nvars(), i));
}

MonomialIdeal colon(const MonomialIdeal& j, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(j.size());
  for (const auto& g : j.generators()) gens.push_back(quotient_by_gcd(g, m));
  return MonomialIdeal(j.nvars(), std::move(gens));
}

MonomialIdeal colon_by_maximal_ideal(const MonomialIdeal& j) {
  if (j.nvars() == 0) return j;
  MonomialIdeal out = colon_by_variable(j, 0);
  for (int i = 1; i < j.nvars(); ++i) out = intersection(out, colon_by_variable(j, i));
  return out;
}

MonomialIdeal saturation(const MonomialIdeal& j) {
  MonomialIdeal current = j;
  while (true) {
    MonomialIdeal next = colon_by_maximal_ideal(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace edgedepth
