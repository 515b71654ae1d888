#pragma once

#include <cstdint>

#include "kgraphlet/dyn_graph.hpp"
#include "kgraphlet/edge_enum.hpp"
#include "kgraphlet/types.hpp"

namespace kgraphlet {

// Plain binary partition for edge k-graphlets / k-subtrees: branch on the
// first edge of Gamma(V(In)) and test each child with a full traversal of
// the component of V(In). Same seeding as enumerate_edge_graphlets. Each
// recursion node costs O(m), so the time per solution grows with the graph.
std::uint64_t naive_edge_graphlets(DynGraph& g, std::uint32_t k, EdgeMode mode,
                                   SolutionSink emit, std::uint64_t limit = 0);

}  // namespace kgraphlet
