#include "edgedepth/ear.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_set>

namespace edgedepth {

namespace {

constexpr int kUnreachable = std::numeric_limits<std::int8_t>::max();

std::uint64_t state_key(VertexSet component, VertexSet covered) {
  return (static_cast<std::uint64_t>(component.bits()) << 32) | covered.bits();
}

// Simple path through exactly `within`, from a vertex adjacent to `anchor` to
// a vertex adjacent to `anchor`, or a Hamiltonian cycle of `within` when
// anchor is empty.
std::vector<int> route_through(const Graph& g, VertexSet within, VertexSet anchor) {
  std::vector<int> path;
  const int target = within.size();
  VertexSet anchored = within;
  if (!anchor.empty()) {
    anchored = VertexSet();
    for (int v : within) {
      if (g.neighbors(v).intersects(anchor)) anchored.insert(v);
    }
  }
  std::function<bool(VertexSet)> extend = [&](VertexSet used) -> bool {
    int last = path.back();
    if (static_cast<int>(path.size()) == target) {
      if (anchor.empty()) return g.adjacent(last, path.front());
      return anchored.contains(last);
    }
    for (int w : (g.neighbors(last) & within) - used) {
      path.push_back(w);
      VertexSet next = used;
      next.insert(w);
      if (extend(next)) return true;
      path.pop_back();
    }
    return false;
  };
  VertexSet starts = anchor.empty() ? VertexSet::single(within.first()) : anchored;
  for (int s : starts) {
    path = {s};
    if (extend(VertexSet::single(s))) return path;
  }
  return {};
}

int lowest_neighbor_in(const Graph& g, int v, VertexSet s) {
  return (g.neighbors(v) & s).first();
}

}  // namespace

EarSolver::EarSolver(Graph g) : g_(std::move(g)), odd_cycle_sets_(odd_cycle_vertex_sets(g_)) {}

std::vector<VertexSet> EarSolver::even_ears(VertexSet component, VertexSet covered) const {
  const VertexSet rest = component - covered;
  VertexSet frontier;
  for (int v : rest) {
    if (g_.neighbors(v).intersects(covered)) frontier.insert(v);
  }
  // Breadth-first over (vertex set of the path, last vertex).
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<VertexSet, int>> layer;
  for (int x : frontier) {
    layer.emplace_back(VertexSet::single(x), x);
    seen.insert((static_cast<std::uint64_t>(1u << x) << 5) | static_cast<unsigned>(x));
  }
  std::unordered_set<std::uint32_t> found;
  while (!layer.empty()) {
    std::vector<std::pair<VertexSet, int>> next;
    for (auto [set, last] : layer) {
      if (set.size() % 2 == 0 && frontier.contains(last)) found.insert(set.bits());
      for (int w : (g_.neighbors(last) & rest) - set) {
        VertexSet grown = set;
        grown.insert(w);
        std::uint64_t key = (static_cast<std::uint64_t>(grown.bits()) << 5) |
                            static_cast<unsigned>(w);
        if (seen.insert(key).second) next.emplace_back(grown, w);
      }
    }
    layer = std::move(next);
  }
  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (auto bits : found) out.emplace_back(bits);
  std::sort(out.begin(), out.end(),
            [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return out;
}

int EarSolver::cost(VertexSet component, VertexSet covered) {
  if (covered == component) return 0;
  const auto key = state_key(component, covered);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.cost;

  int best = kUnreachable;
  std::uint32_t best_ear = 0;
  for (VertexSet ear : even_ears(component, covered)) {
    int c = cost(component, covered | ear);
    if (c < best) {
      best = c;
      best_ear = ear.bits();
      if (best == 0) break;
    }
  }
  if (best > 0) {
    for (int x : component - covered) {
      if (!g_.neighbors(x).intersects(covered)) continue;
      VertexSet grown = covered;
      grown.insert(x);
      int c = cost(component, grown);
      if (c != kUnreachable && c + 1 < best) {
        best = c + 1;
        best_ear = VertexSet::single(x).bits();
      }
    }
  }
  memo_[key] = Entry{static_cast<std::int8_t>(best), best_ear};
  return best;
}

std::optional<int> EarSolver::phi_star_component(VertexSet component) {
  if (auto it = phi_cache_.find(component.bits()); it != phi_cache_.end()) {
    return it->second;
  }
  if (!is_connected(g_, component)) {
    throw GraphError("phi* requires a connected vertex set, got " + component.to_string());
  }
  std::optional<int> best;
  const std::uint32_t comp = component.bits();
  for (std::uint32_t sub = comp; sub != 0; sub = (sub - 1) & comp) {
    if (!odd_cycle_sets_[sub]) continue;
    int c = cost(component, VertexSet(sub));
    if (c != kUnreachable && (!best || c < *best)) best = c;
  }
  phi_cache_[comp] = best;
  return best;
}

EarDecomposition EarSolver::decomposition(VertexSet component) {
  const auto phi = phi_star_component(component);
  if (!phi) throw GraphError("component is bipartite: " + component.to_string());

  // Smallest-mask odd cycle achieving the optimum.
  VertexSet start;
  const std::uint32_t comp = component.bits();
  for (std::uint32_t sub = 1; sub <= comp; ++sub) {
    if ((sub & ~comp) != 0 || !odd_cycle_sets_[sub]) continue;
    if (cost(component, VertexSet(sub)) == *phi) {
      start = VertexSet(sub);
      break;
    }
  }

  EarDecomposition out;
  std::vector<int> cycle = route_through(g_, start, VertexSet());
  cycle.push_back(cycle.front());
  out.walks.push_back(Walk{cycle, WalkKind::Closed});
  VertexSet covered = start;
  while (covered != component) {
    const Entry& entry = memo_.at(state_key(component, covered));
    VertexSet ear(entry.ear);
    Walk walk;
    if (ear.size() == 1) {
      int x = ear.first();
      int u = lowest_neighbor_in(g_, x, covered);
      walk = Walk{{u, x, u}, WalkKind::Closed};
    } else {
      std::vector<int> inner = route_through(g_, ear, covered);
      int u = lowest_neighbor_in(g_, inner.front(), covered);
      VertexSet tail_options = g_.neighbors(inner.back()) & covered;
      int w = (tail_options - VertexSet::single(u)).empty()
                  ? u
                  : (tail_options - VertexSet::single(u)).first();
      walk.vertices.push_back(u);
      walk.vertices.insert(walk.vertices.end(), inner.begin(), inner.end());
      walk.vertices.push_back(w);
      walk.kind = (u == w) ? WalkKind::Closed : WalkKind::Open;
    }
    out.walks.push_back(std::move(walk));
    covered |= ear;
  }
  out.covered = covered;
  out.even_walk_count = static_cast<int>(
      std::count_if(out.walks.begin(), out.walks.end(), [](const Walk& w) { return w.is_even(); }));
  return out;
}

std::optional<int> EarSolver::mu_star_on(VertexSet u) {
  if (u.empty()) return std::nullopt;
  for (int v : u) {
    if (!g_.neighbors(v).intersects(u)) return std::nullopt;
  }
  int total = 0;
  for (VertexSet comp : connected_components(g_, u)) {
    auto phi = phi_star_component(comp);
    if (!phi) return std::nullopt;
    int numerator = *phi + comp.size() - 1;
    if (numerator % 2 != 0) {
      throw std::logic_error("phi* + n - c is odd on " + comp.to_string());
    }
    total += numerator / 2;
  }
  return total;
}

std::optional<SInvariantResult> EarSolver::s_invariant_on(VertexSet scope) {
  if (auto it = s_cache_.find(scope.bits()); it != s_cache_.end()) return it->second;
  std::optional<SInvariantResult> best;
  const std::uint32_t all = scope.bits();
  for (std::uint32_t sub = all; sub != 0; sub = (sub - 1) & all) {
    VertexSet u(sub);
    if ((closed_neighborhood(g_, u) & scope) != scope) continue;
    auto mu = mu_star_on(u);
    if (!mu) continue;
    if (!best || *mu < best->value || (*mu == best->value && lex_less(u, best->witness))) {
      best = SInvariantResult{*mu, u};
    }
  }
  s_cache_[all] = best;
  return best;
}

std::optional<SInvariantResult> EarSolver::s_invariant() { return s_invariant_on(g_.vertices()); }

std::optional<std::string> validate_ear_decomposition(const Graph& g, VertexSet component,
                                                      const EarDecomposition& ears) {
  auto walk_ok = [&](const Walk& w) -> std::optional<std::string> {
    if (w.vertices.size() < 2) return "walk with fewer than two vertices";
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
      int a = w.vertices[i];
      int b = w.vertices[i + 1];
      if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || !g.adjacent(a, b)) {
        return "consecutive vertices are not adjacent";
      }
    }
    for (int v : w.vertices) {
      if (!component.contains(v)) return "walk leaves the component";
    }
    bool closed = w.vertices.front() == w.vertices.back();
    if (closed != (w.kind == WalkKind::Closed)) return "walk kind does not match its endpoints";
    const std::size_t distinct_end = w.vertices.size() - (closed ? 1 : 0);
    VertexSet seen;
    for (std::size_t i = 0; i < distinct_end; ++i) {
      if (seen.contains(w.vertices[i])) return "walk repeats a vertex";
      seen.insert(w.vertices[i]);
    }
    return std::nullopt;
  };

  if (ears.walks.empty()) return "no walks";
  const Walk& first = ears.walks.front();
  if (auto err = walk_ok(first)) return "first walk: " + *err;
  if (first.kind != WalkKind::Closed || first.length() < 3 || first.length() % 2 == 0) {
    return "first walk is not an odd cycle";
  }
  VertexSet covered = VertexSet::from_vertices(first.vertices);
  int even = first.is_even() ? 1 : 0;
  for (std::size_t i = 1; i < ears.walks.size(); ++i) {
    const Walk& w = ears.walks[i];
    const std::string where = "walk " + std::to_string(i + 1) + ": ";
    if (auto err = walk_ok(w)) return where + *err;
    if (!covered.contains(w.vertices.front()) || !covered.contains(w.vertices.back())) {
      return where + "endpoint not covered by earlier walks";
    }
    for (std::size_t k = 1; k + 1 < w.vertices.size(); ++k) {
      if (covered.contains(w.vertices[k])) return where + "interior vertex lies on an earlier walk";
      covered.insert(w.vertices[k]);
    }
    if (w.is_even()) ++even;
  }
  if (covered != component) return "walks do not pass through every vertex";
  if (ears.covered != component) return "recorded cover differs from the component";
  if (even != ears.even_walk_count) return "recorded even-walk count is wrong";
  return std::nullopt;
}

PhiStarResult phi_star(const Graph& g) {
  if (!is_strongly_non_bipartite(g)) throw GraphError("phi* requires a strongly non-bipartite graph");
  EarSolver solver(g);
  PhiStarResult out;
  for (VertexSet comp : connected_components(g)) {
    out.value += *solver.phi_star_component(comp);
    out.witnesses.push_back(solver.decomposition(comp));
  }
  return out;
}

int mu_star(const Graph& g) {
  if (!is_strongly_non_bipartite(g)) throw GraphError("mu* requires a strongly non-bipartite graph");
  EarSolver solver(g);
  return *solver.mu_star_on(g.vertices());
}

SInvariantResult s_invariant(const Graph& g) {
  EarSolver solver(g);
  auto s = solver.s_invariant();
  if (!s) throw GraphError("no dominating set induces a strongly non-bipartite subgraph");
  return *s;
}

bool mu_star_extension_bound_check(const Graph& g, VertexSet u, int v) {
  EarSolver solver(g);
  auto base = solver.mu_star_on(u);
  if (!base) throw GraphError("Gamma_U is not strongly non-bipartite");
  if (v < 0 || v >= g.order() || u.contains(v) || !g.neighbors(v).intersects(u)) {
    throw GraphError("vertex must lie outside U and be adjacent to U");
  }
  VertexSet grown = u;
  grown.insert(v);
  auto extended = solver.mu_star_on(grown);
  return extended && *extended <= *base + 1;
}

}  // namespace edgedepth
