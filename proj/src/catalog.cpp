#include "edgedepth/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace edgedepth {

CatalogError::CatalogError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

CatalogFormat parse_catalog_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return CatalogFormat::Graph6;
  if (name == "edgelist") return CatalogFormat::EdgeList;
  throw CatalogError(0, "unknown catalog format '" + std::string(name) + "'");
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

namespace {

Graph decode_graph6(std::string_view s, int line) {
  for (char ch : s) {
    if (ch < 63 || ch > 126) throw CatalogError(line, "invalid graph6 character");
  }
  if (s.empty()) throw CatalogError(line, "empty graph6 string");
  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(s[0]) < 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || static_cast<unsigned char>(s[1]) == 126) {
      throw CatalogError(line, "graph6 order out of supported range");
    }
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (s[k] - 63);
    pos = 4;
  }
  if (n < 1 || n > 32) throw CatalogError(line, "graph order must lie in 1..32");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (pairs + 5) / 6;
  if (s.size() - pos != bytes) throw CatalogError(line, "graph6 length does not match order");
  std::vector<Graph::Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    int last = s[pos + bytes - 1] - 63;
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) throw CatalogError(line, "nonzero graph6 padding");
  }
  return Graph::with_isolated(n, edges);
}

std::string strip(std::string s) {
  if (auto c = s.find('#'); c != std::string::npos) s.erase(c);
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<long> integers(const std::string& s, int line) {
  std::istringstream in(s);
  std::vector<long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw CatalogError(line, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

void accept(Catalog& c, Graph g, int line) {
  if (g.has_isolated_vertices()) {
    c.warnings.push_back("line " + std::to_string(line) + ": graph with isolated vertices skipped");
    return;
  }
  c.graphs.push_back(std::move(g));
  c.lines.push_back(line);
}

}  // namespace

Graph from_graph6(std::string_view line) {
  if (line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
  return decode_graph6(line, 0);
}

Catalog parse_catalog(std::istream& in, CatalogFormat format) {
  Catalog c;
  std::string raw;
  int line = 0;
  if (format == CatalogFormat::Graph6) {
    while (std::getline(in, raw)) {
      ++line;
      std::string s = strip(raw);
      if (line == 1 && s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
      if (s.empty()) continue;
      accept(c, decode_graph6(s, line), line);
    }
    return c;
  }
  int n = 0, remaining = -1, start = 0;
  std::vector<Graph::Edge> edges;
  std::set<Graph::Edge> seen;
  auto finish = [&] {
    try {
      accept(c, Graph::with_isolated(n, edges), start);
    } catch (const GraphError& e) {
      throw CatalogError(start, e.what());
    }
    remaining = -1;
  };
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip(raw);
    if (s.empty()) continue;
    auto v = integers(s, line);
    if (v.size() != 2) throw CatalogError(line, "expected two integers");
    if (remaining < 0) {
      if (v[0] < 1 || v[0] > 32) throw CatalogError(line, "vertex count must lie in 1..32");
      if (v[1] < 0 || v[1] > v[0] * (v[0] - 1) / 2) throw CatalogError(line, "impossible edge count");
      n = static_cast<int>(v[0]);
      remaining = static_cast<int>(v[1]);
      start = line;
      edges.clear();
      seen.clear();
      if (remaining == 0) finish();
      continue;
    }
    if (v[0] < 1 || v[0] > n || v[1] < 1 || v[1] > n) throw CatalogError(line, "vertex label out of range");
    if (v[0] == v[1]) throw CatalogError(line, "loop at vertex " + std::to_string(v[0]));
    Graph::Edge e{static_cast<int>(std::min(v[0], v[1])) - 1, static_cast<int>(std::max(v[0], v[1])) - 1};
    if (!seen.insert(e).second) throw CatalogError(line, "duplicate edge");
    edges.push_back(e);
    if (--remaining == 0) finish();
  }
  if (remaining > 0) throw CatalogError(line, "edge list block starting at line " + std::to_string(start) + " is truncated");
  return c;
}

Catalog ingest_catalog(const std::string& path, CatalogFormat format) {
  std::ifstream in(path);
  if (!in) throw CatalogError(0, "cannot read '" + path + "'");
  return parse_catalog(in, format);
}

void write_graph6_catalog(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

void write_edgelist_catalog(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  }
}

std::uint64_t adjacency_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw GraphError("adjacency code supports at most 11 vertices");
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1u : 0u);
  }
  return code;
}

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 9) throw GraphError("canonical form supports at most 9 vertices");
  // vertices are placed in order of a relabeling-invariant key, so only
  // orderings within equal keys need to be tried
  std::vector<std::vector<int>> key(n);
  for (int v = 0; v < n; ++v) {
    key[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.rbegin(), nd.rend());
    key[v].insert(key[v].end(), nd.begin(), nd.end());
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] > key[b]; });
  std::vector<int> group(n);
  for (int p = 0, gi = 0; p < n; ++p) {
    if (p > 0 && key[order[p]] != key[order[p - 1]]) ++gi;
    group[p] = gi;
  }
  std::vector<int> place(n), best;
  std::uint64_t best_code = 0;
  bool have = false;
  std::uint32_t used = 0;
  std::function<void(int, std::uint64_t)> rec = [&](int p, std::uint64_t code) {
    if (p == n) {
      if (!have || code > best_code) {
        best_code = code;
        best = place;
        have = true;
      }
      return;
    }
    for (int q = 0; q < n; ++q) {
      int v = order[q];
      if (group[q] != group[p] || (used >> v) & 1u) continue;
      std::uint64_t c = code;
      for (int i = 0; i < p; ++i) c = (c << 1) | (g.adjacent(place[i], v) ? 1u : 0u);
      used |= 1u << v;
      place[p] = v;
      rec(p + 1, c);
      used &= ~(1u << v);
    }
  };
  rec(0, 0);
  std::vector<int> label(n);
  for (int p = 0; p < n; ++p) label[best[p]] = p;
  std::vector<Graph::Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
  return Graph::with_isolated(n, edges);
}

std::vector<Graph> generate_connected_graphs(int n, bool non_bipartite_only) {
  if (n < 2 || n > 9) throw GraphError("generation supports 2..9 vertices");
  // every connected graph has a vertex whose removal leaves it connected
  std::vector<Graph> level{Graph::from_edges(2, {{0, 1}})};
  for (int m = 3; m <= n; ++m) {
    std::set<std::pair<int, std::uint64_t>> seen;
    std::vector<Graph> next;
    for (const Graph& h : level) {
      for (std::uint32_t nb = 1; nb < (1u << (m - 1)); ++nb) {
        std::vector<Graph::Edge> edges = h.edges();
        for (int u = 0; u < m - 1; ++u) {
          if ((nb >> u) & 1u) edges.emplace_back(u, m - 1);
        }
        Graph c = canonical_form(Graph::from_edges(m, edges));
        if (seen.insert({c.edge_count(), adjacency_code(c)}).second) next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return adjacency_code(a) < adjacency_code(b);
  });
  if (non_bipartite_only) {
    std::erase_if(level, [](const Graph& g) { return is_bipartite(g).bipartite; });
  }
  for (Graph& g : level) g = Graph::from_edges(g.order(), g.edges());
  return level;
}

}  // namespace edgedepth
