#include "edgedepth/depth.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgedepth {

std::string to_string(DepthKind kind) {
  switch (kind) {
    case DepthKind::Zero:
      return "ZERO";
    case DepthKind::One:
      return "ONE";
    case DepthKind::AtLeastTwo:
      return "GEQ2";
  }
  return "?";
}

namespace {

void require_t(int t) {
  if (t < 1) throw std::invalid_argument("power exponent t must be >= 1");
}

bool kind_matches(DepthKind kind, int depth) {
  switch (kind) {
    case DepthKind::Zero:
      return depth == 0;
    case DepthKind::One:
      return depth == 1;
    case DepthKind::AtLeastTwo:
      return depth >= 2;
  }
  return false;
}

// Advances the exponent vector d through {0..t}^n in lexicographic order,
// keeping idx as its index in a box with the given strides.
bool advance(std::vector<int>& d, std::size_t& idx, int t, const ExponentBox& box) {
  int i = static_cast<int>(d.size()) - 1;
  while (i >= 0 && d[i] == t) {
    idx -= static_cast<std::size_t>(t) * box.stride(i);
    d[i] = 0;
    --i;
  }
  if (i < 0) return false;
  ++d[i];
  idx += box.stride(i);
  return true;
}

}  // namespace

DepthEngine::DepthEngine(Graph g)
    : g_(std::move(g)), solver_(g_), mis_(maximal_independent_sets(g_)) {}

const EdgeMatchingTable& DepthEngine::table(int t) {
  if (!table_ || table_->box().cap() < t) table_ = std::make_unique<EdgeMatchingTable>(g_, t);
  return *table_;
}

Decision DepthEngine::depth_zero(int t) {
  require_t(t);
  Decision d;
  auto s = solver_.s_invariant();
  if (s && s->value < t) {
    d.holds = true;
    d.witness = witness::DominatingSet{s->witness, s->value};
  }
  return d;
}

Decision DepthEngine::localized_depth_zero(int v, int t) {
  require_t(t);
  if (v < 0 || v >= g_.order()) throw GraphError("vertex out of range");
  Decision d;
  const VertexSet rest = g_.vertices() - g_.closed_neighborhood(v);
  if (rest.empty()) return d;
  auto s = solver_.s_invariant_on(rest);
  if (s && s->value < t) {
    d.holds = true;
    d.witness = witness::LocalizedVertex{v, false, s->witness, s->value};
  }
  return d;
}

void DepthEngine::for_each_disconnecting_vector(int t, const DisconnectingVisitor& visit) {
  require_t(t);
  const EdgeMatchingTable& tab = table(t);
  const ExponentBox& box = tab.box();
  const int n = g_.order();
  std::vector<int> d(n, 0);
  std::size_t idx = 0;
  // every face of Delta_a(I^t) is an independent set, and connectivity is
  // decided on the 1-skeleton
  do {
    if (tab.nu(idx) >= t) continue;
    std::uint32_t verts = 0;
    for (int v = 0; v < n; ++v) {
      if (tab.nu(idx + static_cast<std::size_t>(t - d[v]) * box.stride(v)) < t) verts |= 1u << v;
    }
    if (std::popcount(verts) < 2) continue;
    auto pair_face = [&](int u, int w) {
      if (g_.adjacent(u, w)) return false;
      std::size_t j = idx + static_cast<std::size_t>(t - d[u]) * box.stride(u) +
                      static_cast<std::size_t>(t - d[w]) * box.stride(w);
      return tab.nu(j) < t;
    };
    std::vector<VertexSet> comps;
    VertexSet remaining(verts);
    while (!remaining.empty()) {
      VertexSet comp = VertexSet::single(remaining.first());
      VertexSet frontier = comp;
      remaining = remaining - comp;
      while (!frontier.empty()) {
        VertexSet next;
        for (int u : frontier) {
          for (int w : remaining - next) {
            if (pair_face(u, w)) next.insert(w);
          }
        }
        remaining = remaining - next;
        comp |= next;
        frontier = next;
      }
      comps.push_back(comp);
      if (comps.size() == 1 && remaining.empty()) break;
    }
    if (comps.size() >= 2) {
      sort_canonical(comps);
      if (!visit(Monomial(d), comps)) return;
    }
  } while (advance(d, idx, t, box));
}

void DepthEngine::for_each_symbolic_disconnecting_vector(int t,
                                                         const DisconnectingVisitor& visit) const {
  require_t(t);
  const int n = g_.order();
  const ExponentBox box(n, t);
  std::vector<int> d(n, 0);
  std::size_t idx = 0;
  int total = 0;
  do {
    total = 0;
    for (int x : d) total += x;
    std::vector<VertexSet> facets;
    for (VertexSet f : mis_) {
      int inside = 0;
      for (int v : f) inside += d[v];
      if (total - inside < t) facets.push_back(f);
    }
    if (facets.size() < 2) continue;
    SimplicialComplex c(n, std::move(facets));
    auto comps = c.components();
    if (comps.size() >= 2 && !visit(Monomial(d), comps)) return;
  } while (advance(d, idx, t, box));
}

std::optional<witness::DisconnectingVector> DepthEngine::disconnecting_vector(int t) {
  std::optional<witness::DisconnectingVector> out;
  for_each_disconnecting_vector(t, [&](const Monomial& a, const std::vector<VertexSet>& c) {
    out = witness::DisconnectingVector{a, c};
    return false;
  });
  return out;
}

std::optional<witness::DisconnectingVector> DepthEngine::symbolic_disconnecting_vector(
    int t) const {
  std::optional<witness::DisconnectingVector> out;
  for_each_symbolic_disconnecting_vector(t, [&](const Monomial& a, const std::vector<VertexSet>& c) {
    out = witness::DisconnectingVector{a, c};
    return false;
  });
  return out;
}

SimplicialComplex DepthEngine::ordinary_degree_complex(const Monomial& a, int t) {
  require_t(t);
  const int n = g_.order();
  const EdgeMatchingTable& tab = table(t);
  const ExponentBox& box = tab.box();
  const Monomial capped = a.capped(t);
  const std::size_t base = box.index(capped);
  std::vector<VertexSet> faces;
  for (VertexSet f : independent_sets(g_)) {
    std::size_t j = base;
    for (int v : f) j += static_cast<std::size_t>(t - capped[v]) * box.stride(v);
    if (tab.nu(j) < t) faces.push_back(f);
  }
  return SimplicialComplex(n, std::move(faces));
}

Decision DepthEngine::h1_nonzero(int t) {
  require_t(t);
  auto it = h1_cache_.find(t);
  if (it == h1_cache_.end()) it = h1_cache_.emplace(t, compute_h1(t)).first;
  return it->second;
}

Decision DepthEngine::compute_h1(int t) {
  for (int v = 0; v < g_.order(); ++v) {
    if (g_.closed_neighborhood(v) == g_.vertices()) {
      return Decision{true, witness::LocalizedVertex{v, true, VertexSet(), 0}};
    }
    Decision local = localized_depth_zero(v, t);
    if (local.holds) return local;
  }
  if (auto w = disconnecting_vector(t)) return Decision{true, *w};
  return Decision{};
}

Decision DepthEngine::symbolic_h1_nonzero(int t) {
  require_t(t);
  auto it = symbolic_cache_.find(t);
  if (it == symbolic_cache_.end()) it = symbolic_cache_.emplace(t, compute_symbolic_h1(t)).first;
  return it->second;
}

Decision DepthEngine::compute_symbolic_h1(int t) const {
  for (int v = 0; v < g_.order(); ++v) {
    if (g_.closed_neighborhood(v) == g_.vertices()) {
      return Decision{true, witness::LocalizedVertex{v, true, VertexSet(), 0}};
    }
  }
  if (auto w = symbolic_disconnecting_vector(t)) return Decision{true, *w};
  return Decision{};
}

Decision DepthEngine::symbolic_depth_one(int t) {
  if (!is_connected(g_)) throw GraphError("symbolic depth-one test requires a connected graph");
  return symbolic_h1_nonzero(t);
}

DepthClass DepthEngine::classify(int t) {
  DepthClass c;
  if (Decision z = depth_zero(t); z.holds) {
    c.kind = DepthKind::Zero;
    c.exact_depth = 0;
    c.witness = z.witness;
  } else if (Decision h = h1_nonzero(t); h.holds) {
    c.kind = DepthKind::One;
    c.exact_depth = 1;
    c.witness = h.witness;
  }
  return c;
}

DepthClass DepthEngine::classify_symbolic(int t) {
  DepthClass c;
  if (Decision h = symbolic_h1_nonzero(t); h.holds) {
    c.kind = DepthKind::One;
    c.exact_depth = 1;
    c.witness = h.witness;
  }
  return c;
}

DepthProfile DepthEngine::profile(int t_max, bool with_oracle, std::uint32_t prime) {
  require_t(t_max);
  DepthProfile p;
  p.t_max = t_max;
  table(t_max);
  const MonomialIdeal i = edge_ideal(g_);
  for (int t = 1; t <= t_max; ++t) {
    DepthClass ord = classify(t);
    DepthClass sym = classify_symbolic(t);
    if (with_oracle) {
      int d = depth_oracle(power(i, t), prime);
      ord.oracle_consistent = kind_matches(ord.kind, d);
      ord.exact_depth = d;
      int ds = depth_oracle(symbolic_power_generators(g_, t), prime);
      sym.oracle_consistent = kind_matches(sym.kind, ds);
      sym.exact_depth = ds;
    }
    p.ordinary.push_back(std::move(ord));
    p.symbolic.push_back(std::move(sym));
  }
  return p;
}

Decision depth_zero(const Graph& g, int t) { return DepthEngine(g).depth_zero(t); }
Decision h1_nonzero(const Graph& g, int t) { return DepthEngine(g).h1_nonzero(t); }
Decision localized_depth_zero(const Graph& g, int v, int t) {
  return DepthEngine(g).localized_depth_zero(v, t);
}
Decision symbolic_depth_one(const Graph& g, int t) { return DepthEngine(g).symbolic_depth_one(t); }
DepthProfile depth_profile(const Graph& g, int t_max, bool with_oracle, std::uint32_t prime) {
  return DepthEngine(g).profile(t_max, with_oracle, prime);
}

}  // namespace edgedepth
