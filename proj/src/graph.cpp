#include "edgedepth/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace edgedepth {

Graph Graph::build(int n, const std::vector<Edge>& edges, bool allow_isolated) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count out of range: " + std::to_string(n));
  }
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge endpoint out of range: " + std::to_string(u + 1) +
                       " " + std::to_string(v + 1));
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u + 1));
    if (g.adjacent(u, v)) {
      throw GraphError("duplicate edge " + std::to_string(u + 1) + " " +
                       std::to_string(v + 1));
    }
    g.adj_[u] |= 1u << v;
    g.adj_[v] |= 1u << u;
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (!allow_isolated && g.has_isolated_vertices()) {
    for (int v = 0; v < n; ++v) {
      if (g.adj_[v] == 0) {
        throw GraphError("isolated vertex " + std::to_string(v + 1));
      }
    }
  }
  return g;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  return build(n, edges, false);
}

Graph Graph::from_labeled_edges(int n, const std::vector<Edge>& edges) {
  std::vector<Edge> shifted;
  shifted.reserve(edges.size());
  for (auto [u, v] : edges) shifted.emplace_back(u - 1, v - 1);
  return build(n, shifted, false);
}

Graph Graph::with_isolated(int n, const std::vector<Edge>& edges) {
  return build(n, edges, true);
}

bool Graph::has_isolated_vertices() const {
  return std::any_of(adj_.begin(), adj_.end(), [](std::uint32_t a) { return a == 0; });
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet u) {
  if (u.empty()) throw GraphError("induced subgraph on an empty vertex set");
  if (!u.subset_of(g.vertices())) throw GraphError("vertex set not contained in V");
  InducedSubgraph out;
  out.vertices = u.vertices();
  std::vector<int> position(g.order(), -1);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    position[out.vertices[i]] = static_cast<int>(i);
  }
  std::vector<Graph::Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (u.contains(a) && u.contains(b)) edges.emplace_back(position[a], position[b]);
  }
  out.graph = Graph::with_isolated(u.size(), edges);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet scope) {
  std::vector<VertexSet> out;
  VertexSet rest = scope;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & scope) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

bool is_connected(const Graph& g, VertexSet scope) {
  return connected_components(g, scope).size() <= 1;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

BipartiteResult is_bipartite(const Graph& g, VertexSet scope) {
  BipartiteResult result;
  std::vector<int> color(g.order(), -1);
  std::vector<int> parent(g.order(), -1);
  std::vector<int> depth(g.order(), 0);
  for (int root : scope) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u) & scope) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Walk both BFS-tree paths up to their meeting point.
          std::vector<int> left{u};
          std::vector<int> right{w};
          int a = u;
          int b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          result.bipartite = false;
          result.odd_cycle.assign(left.rbegin(), left.rend());
          result.odd_cycle.insert(result.odd_cycle.end(), right.begin(), right.end());
          return result;
        }
      }
    }
  }
  return result;
}

BipartiteResult is_bipartite(const Graph& g) { return is_bipartite(g, g.vertices()); }

bool is_strongly_non_bipartite(const Graph& g, VertexSet scope) {
  if (scope.empty()) return false;
  for (VertexSet comp : connected_components(g, scope)) {
    if (is_bipartite(g, comp).bipartite) return false;
  }
  return true;
}

bool is_strongly_non_bipartite(const Graph& g) {
  return is_strongly_non_bipartite(g, g.vertices());
}

bool is_dominating(const Graph& g, VertexSet u) {
  return closed_neighborhood(g, u) == g.vertices();
}

VertexSet neighborhood(const Graph& g, int v) { return g.neighbors(v); }

VertexSet closed_neighborhood(const Graph& g, int v) {
  return g.closed_neighborhood(v);
}

VertexSet closed_neighborhood(const Graph& g, VertexSet u) {
  VertexSet out = u;
  for (int v : u) out |= g.neighbors(v);
  return out;
}

bool is_independent(const Graph& g, VertexSet u) {
  for (int v : u) {
    if (g.neighbors(v).intersects(u)) return false;
  }
  return true;
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph: maximal cliques of the
// complement are the maximal independent sets.
void bron_kerbosch(const std::vector<std::uint32_t>& nonadj, std::uint32_t r,
                   std::uint32_t p, std::uint32_t x, std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.emplace_back(r);
    return;
  }
  std::uint32_t px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for (int u : VertexSet(px)) {
    int count = std::popcount(p & nonadj[u]);
    if (count > best) {
      best = count;
      pivot = u;
    }
  }
  for (int v : VertexSet(p & ~nonadj[pivot])) {
    std::uint32_t bit = 1u << v;
    bron_kerbosch(nonadj, r | bit, p & nonadj[v], x & nonadj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint32_t> nonadj(n);
  for (int v = 0; v < n; ++v) {
    nonadj[v] = g.vertices().bits() & ~g.neighbors(v).bits() & ~(1u << v);
  }
  std::vector<VertexSet> out;
  if (n > 0) bron_kerbosch(nonadj, 0, g.vertices().bits(), 0, out);
  sort_canonical(out);
  return out;
}

std::vector<VertexSet> independent_sets(const Graph& g) {
  std::vector<VertexSet> out{VertexSet()};
  // Extend every set only by vertices larger than its maximum.
  for (std::size_t i = 0; i < out.size(); ++i) {
    VertexSet s = out[i];
    int start = s.empty() ? 0 : 32 - std::countl_zero(s.bits());
    for (int v = start; v < g.order(); ++v) {
      if (!g.neighbors(v).intersects(s)) {
        VertexSet t = s;
        t.insert(v);
        out.push_back(t);
      }
    }
  }
  sort_canonical(out);
  return out;
}

std::optional<std::pair<VertexSet, VertexSet>> disjoint_connected_mis_pair(
    const Graph& g) {
  const auto mis = maximal_independent_sets(g);
  std::optional<std::pair<VertexSet, VertexSet>> best;
  int best_size = 0;
  for (std::size_t i = 0; i < mis.size(); ++i) {
    for (std::size_t j = i + 1; j < mis.size(); ++j) {
      if (mis[i].intersects(mis[j])) continue;
      int size = mis[i].size() + mis[j].size();
      if (best && size >= best_size) continue;
      if (!is_connected(g, mis[i] | mis[j])) continue;
      best = std::make_pair(mis[i], mis[j]);
      best_size = size;
    }
  }
  return best;
}

Graph complement_graph(const Graph& g) {
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::with_isolated(g.order(), edges);
}

std::string Diameter::to_string() const {
  return is_infinite() ? "INFINITE" : std::to_string(value_);
}

Diameter diameter(const Graph& g) {
  int best = 0;
  for (int source = 0; source < g.order(); ++source) {
    VertexSet seen = VertexSet::single(source);
    VertexSet frontier = seen;
    int dist = 0;
    while (true) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = next - seen;
      if (next.empty()) break;
      ++dist;
      seen |= next;
      frontier = next;
    }
    if (seen != g.vertices()) return Diameter::infinite();
    best = std::max(best, dist);
  }
  return Diameter::finite(best);
}

Diameter complement_diameter(const Graph& g) { return diameter(complement_graph(g)); }

std::vector<std::vector<int>> odd_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::function<void(int, VertexSet)> extend = [&](int start, VertexSet used) {
    int last = path.back();
    for (int w : g.neighbors(last)) {
      if (w == start && path.size() >= 3 && path.size() % 2 == 1 &&
          path[1] < path.back()) {
        out.push_back(path);
      }
      if (w <= start || used.contains(w)) continue;
      path.push_back(w);
      VertexSet next = used;
      next.insert(w);
      extend(start, next);
      path.pop_back();
    }
  };
  for (int start = 0; start < g.order(); ++start) {
    path = {start};
    extend(start, VertexSet::single(start));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_dominating_cycle(const Graph& g, const std::vector<int>& cycle) {
  return is_dominating(g, VertexSet::from_vertices(cycle));
}

std::vector<std::uint8_t> odd_cycle_vertex_sets(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw GraphError("odd cycle table supports at most 20 vertices");
  const std::size_t total = std::size_t{1} << n;
  // ends[S]: endpoints v of paths that start at min(S) and visit exactly S.
  std::vector<std::uint32_t> ends(total, 0);
  std::vector<std::uint8_t> flags(total, 0);
  for (int s = 0; s < n; ++s) ends[std::size_t{1} << s] = 1u << s;
  for (std::size_t mask = 1; mask < total; ++mask) {
    const std::uint32_t e = ends[mask];
    if (e == 0) continue;
    const int start = std::countr_zero(static_cast<std::uint32_t>(mask));
    const int size = std::popcount(static_cast<std::uint32_t>(mask));
    if (size >= 3 && size % 2 == 1 && (e & g.neighbors(start).bits()) != 0) {
      flags[mask] = 1;
    }
    for (int v : VertexSet(e)) {
      std::uint32_t grow = g.neighbors(v).bits() & ~static_cast<std::uint32_t>(mask);
      grow &= ~((2u << start) - 1u);  // only vertices above the start
      for (int w : VertexSet(grow)) ends[mask | (std::size_t{1} << w)] |= 1u << w;
    }
  }
  return flags;
}

bool has_only_dominating_odd_cycles(const Graph& g) {
  const auto flags = odd_cycle_vertex_sets(g);
  for (std::size_t mask = 0; mask < flags.size(); ++mask) {
    if (flags[mask] && !is_dominating(g, VertexSet(static_cast<std::uint32_t>(mask)))) {
      return false;
    }
  }
  return true;
}

}  // namespace edgedepth
