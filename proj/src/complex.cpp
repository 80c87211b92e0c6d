#include "edgedepth/complex.hpp"

#include <algorithm>
#include <numeric>

namespace edgedepth {

namespace {

// Calls f for every composition of total into parts.size() non-negative
// parts, written into parts, in lexicographic order.
template <class F>
void for_each_composition(std::vector<int>& parts, std::size_t at, int total, F&& f) {
  if (at + 1 == parts.size()) {
    parts[at] = total;
    f();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    parts[at] = x;
    for_each_composition(parts, at + 1, total - x, f);
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n) {
  sort_canonical(facets);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (VertexSet f : facets) {
    bool maximal = std::none_of(facets.begin(), facets.end(), [f](VertexSet h) {
      return h != f && f.subset_of(h);
    });
    if (maximal) facets_.push_back(f);
  }
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [face](VertexSet f) { return face.subset_of(f); });
}

int SimplicialComplex::dimension() const {
  int d = -2;
  for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::vector<VertexSet> out;
  std::uint32_t seen_all = 0;
  for (VertexSet f : facets_) seen_all |= f.bits();
  if (is_void()) return out;
  // all subsets of the union that lie in some facet
  const std::uint32_t u = seen_all;
  for (std::uint32_t s = u;; s = (s - 1) & u) {
    if (contains(VertexSet(s))) out.emplace_back(s);
    if (s == 0) break;
  }
  sort_canonical(out);
  return out;
}

std::vector<VertexSet> SimplicialComplex::components() const {
  std::vector<VertexSet> groups;
  for (VertexSet f : facets_) {
    VertexSet merged = f;
    std::vector<VertexSet> rest;
    for (VertexSet h : groups) {
      if (h.intersects(merged)) {
        merged |= h;
      } else {
        rest.push_back(h);
      }
    }
    rest.push_back(merged);
    groups = std::move(rest);
  }
  sort_canonical(groups);
  return groups;
}

SimplicialComplex degree_complex(const MonomialIdeal& j, const Monomial& a) {
  const int n = j.nvars();
  if (n > 20) throw std::length_error("degree complex limited to 20 variables");
  // x^a lies in the localization at F iff some generator exceeds a only on F
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::uint8_t> in_localization(subsets, 0);
  for (const auto& g : j.generators()) {
    std::uint32_t excess = 0;
    for (int i = 0; i < n; ++i) {
      if (g[i] > a[i]) excess |= 1u << i;
    }
    in_localization[excess] = 1;
  }
  for (int i = 0; i < n; ++i) {
    for (std::uint32_t s = 0; s < subsets; ++s) {
      if ((s >> i & 1) && in_localization[s & ~(1u << i)]) in_localization[s] = 1;
    }
  }
  std::vector<VertexSet> facets;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    if (in_localization[s]) continue;
    bool maximal = true;
    for (int i = 0; i < n && maximal; ++i) {
      if (!(s >> i & 1) && !in_localization[s | (1u << i)]) maximal = false;
    }
    if (maximal) facets.emplace_back(s);
  }
  return SimplicialComplex(n, std::move(facets));
}

bool is_disconnected(const SimplicialComplex& c) {
  return c.facets().size() >= 2 && c.components().size() >= 2;
}

std::vector<VertexSet> symbolic_facets(const std::vector<VertexSet>& maximal_independent,
                                       const Monomial& a, int t) {
  const int total = a.degree();
  std::vector<VertexSet> out;
  for (VertexSet f : maximal_independent) {
    int inside = 0;
    for (int v : f) inside += a[v];
    if (total - inside < t) out.push_back(f);
  }
  sort_canonical(out);
  return out;
}

std::vector<VertexSet> symbolic_facets(const Graph& g, const Monomial& a, int t) {
  if (t < 1) throw std::invalid_argument("symbolic facets require t >= 1");
  return symbolic_facets(maximal_independent_sets(g), a, t);
}

AssociatedPrimeAudit facet_prime_is_associated(const Graph& g, int t, VertexSet f,
                                               std::optional<int> cap) {
  AssociatedPrimeAudit audit;
  audit.cap = cap.value_or(t);
  const int n = g.order();
  const MonomialIdeal it = power(edge_ideal(g), t);
  const MonomialIdeal target = MonomialIdeal::face_prime(n, f);
  const IdealMembershipTable table(it, audit.cap + 1);
  const ExponentBox& box = table.box();
  std::vector<int> digits(n, 0);
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    bool in_range = true;
    std::size_t rest = idx;
    for (int i = 0; i < n; ++i) {
      digits[i] = static_cast<int>(rest / box.stride(i));
      rest %= box.stride(i);
      if (digits[i] > audit.cap) in_range = false;
    }
    if (!in_range || table.contains(idx)) continue;
    bool killed = true;
    for (int i = 0; i < n && killed; ++i) {
      if (!f.contains(i) && !table.contains(idx + box.stride(i))) killed = false;
    }
    if (!killed) continue;
    Monomial m(digits);
    if (colon(it, m) == target) {
      audit.confirmed = true;
      audit.witness = m;
      return audit;
    }
  }
  return audit;
}

std::optional<Monomial> find_disconnecting_vector(const Graph& g, VertexSet f, VertexSet g2,
                                                  int t) {
  if (t < 1) throw GraphError("disconnecting vector search requires t >= 1");
  if (f.intersects(g2)) throw GraphError("F and G must be disjoint");
  const auto mis = maximal_independent_sets(g);
  auto is_mis = [&](VertexSet s) { return std::find(mis.begin(), mis.end(), s) != mis.end(); };
  if (!is_mis(f) || !is_mis(g2)) throw GraphError("F and G must be maximal independent sets");
  if (!is_connected(g, f | g2)) throw GraphError("Gamma_{F u G} must be connected");

  std::vector<VertexSet> expected{f, g2};
  sort_canonical(expected);
  const std::vector<int> fv = f.vertices();
  const std::vector<int> gv = g2.vertices();
  std::vector<int> fp(fv.size()), gp(gv.size());
  std::optional<Monomial> best;
  for_each_composition(fp, 0, t - 1, [&] {
    for_each_composition(gp, 0, t - 1, [&] {
      std::vector<int> e(g.order(), 0);
      for (std::size_t k = 0; k < fv.size(); ++k) e[fv[k]] = fp[k];
      for (std::size_t k = 0; k < gv.size(); ++k) e[gv[k]] = gp[k];
      Monomial a(std::move(e));
      if (best && !(a < *best)) return;
      if (symbolic_facets(mis, a, t) == expected) best = std::move(a);
    });
  });
  return best;
}

}  // namespace edgedepth
