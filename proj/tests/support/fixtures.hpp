#pragma once

#include <vector>

#include "edgedepth/graph.hpp"
#include "edgedepth/named.hpp"
#include "edgedepth/vertex_set.hpp"

namespace fixtures {

inline edgedepth::Graph k2() { return edgedepth::named::complete(2); }
inline edgedepth::Graph triangle() { return edgedepth::named::complete(3); }
inline edgedepth::Graph c5() { return edgedepth::named::cycle(5); }
inline edgedepth::Graph tail4() { return edgedepth::named::triangle_with_tail(4); }
inline edgedepth::Graph cone_pendant() { return edgedepth::named::cone_with_pendant(); }
inline edgedepth::Graph triangle_fork() { return edgedepth::named::triangle_with_fork(); }

inline edgedepth::VertexSet labels(std::initializer_list<int> l) {
  return edgedepth::VertexSet::from_labels(l);
}

}  // namespace fixtures
