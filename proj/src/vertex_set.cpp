#include "edgedepth/vertex_set.hpp"

#include <algorithm>

#include "edgedepth/graph.hpp"

namespace edgedepth {

namespace {

void check_vertex(int v) {
  if (v < 0 || v >= kMaxVertices) {
    throw GraphError("vertex out of range: " + std::to_string(v));
  }
}

}  // namespace

VertexSet VertexSet::from_vertices(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    check_vertex(v);
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::from_labels(std::initializer_list<int> labels) {
  return from_labels(std::vector<int>(labels));
}

VertexSet VertexSet::from_labels(const std::vector<int>& labels) {
  VertexSet s;
  for (int label : labels) {
    check_vertex(label - 1);
    s.insert(label - 1);
  }
  return s;
}

std::vector<int> VertexSet::vertices() const { return {begin(), end()}; }

std::vector<int> VertexSet::labels() const {
  std::vector<int> out;
  for (int v : *this) out.push_back(v + 1);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (int v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v + 1);
    first_item = false;
  }
  return out + "}";
}

bool lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

void sort_canonical(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
}

}  // namespace edgedepth
