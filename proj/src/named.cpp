#include "edgedepth/named.hpp"

namespace edgedepth::named {

Graph complete(int n) {
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Graph::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  std::vector<Graph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph star(int leaves) {
  std::vector<Graph::Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph triangle_with_tail(int s) {
  std::vector<Graph::Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (int k = 0; k < s; ++k) edges.emplace_back(2 + k, 3 + k);
  return Graph::from_edges(3 + s, edges);
}

Graph cone_with_pendant() {
  return Graph::from_labeled_edges(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}});
}

Graph triangle_with_fork() {
  return Graph::from_labeled_edges(6, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}});
}

}  // namespace edgedepth::named
