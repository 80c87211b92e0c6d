#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edgedepth/graph.hpp"

namespace edgedepth {

/// Malformed catalog input. line() is 1-based, or 0 when not tied to a line.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

enum class CatalogFormat { Graph6, EdgeList };

/// "graph6" or "edgelist"; throws CatalogError otherwise.
CatalogFormat parse_catalog_format(std::string_view name);

/// Standard graph6 encoding (no header).
std::string to_graph6(const Graph& g);
/// Decodes one graph6 line. Isolated vertices are kept; throws CatalogError.
Graph from_graph6(std::string_view line);

struct Catalog {
  std::vector<Graph> graphs;
  /// Source line of each graph (first line of its block for edge lists).
  std::vector<int> lines;
  std::vector<std::string> warnings;
};

/// graph6: one graph per line, optional ">>graph6<<" header. Edge list:
/// blocks of a header "n m" followed by m lines "u v" with labels 1..n.
/// Blank lines and '#' comments are ignored in both. Graphs with isolated
/// vertices are skipped with a warning.
Catalog parse_catalog(std::istream& in, CatalogFormat format);
Catalog ingest_catalog(const std::string& path, CatalogFormat format);

void write_graph6_catalog(std::ostream& out, const std::vector<Graph>& graphs);
void write_edgelist_catalog(std::ostream& out, const std::vector<Graph>& graphs);

/// Adjacency code of g under the identity labeling: bit k is the k-th vertex
/// pair in graph6 order. Requires n <= 11.
std::uint64_t adjacency_code(const Graph& g);
/// Relabeling with the lexicographically largest adjacency code read from the
/// first pair; isomorphic graphs get equal forms. Requires n <= 9.
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices (2 <= n <= 9), in canonical form, ordered by edge count and then
/// by code. Optionally only non-bipartite ones.
std::vector<Graph> generate_connected_graphs(int n, bool non_bipartite_only = false);

}  // namespace edgedepth
