#pragma once

#include "edgedepth/graph.hpp"

namespace edgedepth::named {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
/// Triangle 1-2-3 with a path of length s attached at vertex 3.
Graph triangle_with_tail(int s);
/// Triangle 1-2-3 and a vertex 4 joined to 1, 2, 3 and a pendant vertex 5.
Graph cone_with_pendant();
/// Triangle 1-2-3 with edges 3-4, 4-5 and 4-6.
Graph triangle_with_fork();

}  // namespace edgedepth::named
