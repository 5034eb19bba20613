#pragma once

#include <vector>

#include "relemb/digraph.hpp"

namespace relemb {

// Peels vertices of degree at most d from a bipartite graph until none is
// left to peel and returns the survivors, whose induced minimum degree is at
// least d + 1. Requires |V(H)| >= 2d and |E(H)| > d(|V(H)| - d); throws
// HypothesisError when either fails and InvalidInput when H is not bipartite.
std::vector<VertexId> extract_dense_subgraph(const SimpleGraph& h, int d);

// True when g has no odd cycle.
bool is_bipartite(const SimpleGraph& g);

}  // namespace relemb
