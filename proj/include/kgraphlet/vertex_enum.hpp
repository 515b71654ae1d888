#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kgraphlet/dyn_graph.hpp"
#include "kgraphlet/traversal.hpp"
#include "kgraphlet/types.hpp"

namespace kgraphlet {

// Enumerates k-graphlets (connected vertex-induced subgraphs on k vertices)
// that contain a connected seed set In, by binary partition over the
// neighbours of In. Excluded vertices are deleted from the shared graph and
// restored on backtrack; the graph is left unchanged after every call.
class VertexGraphletEnumerator {
 public:
  VertexGraphletEnumerator(DynGraph& g, std::uint32_t k);

  // Replaces the seed set. G[in] must be connected and all vertices alive.
  void reset(std::span<const VertexId> in);
  std::span<const VertexId> in_set() const { return in_; }
  std::uint32_t k() const { return k_; }

  // Stop after this many emitted solutions (0 = unlimited).
  void set_limit(std::uint64_t limit) { limit_ = limit; }
  std::uint64_t emitted() const { return emitted_; }
  bool stopped() const { return limit_ != 0 && emitted_ >= limit_; }

  // The component of In has at least k vertices. O(min{m, k^2, k*Delta}).
  bool has_solution();
  // v is in every solution: the component of In in G - v has < k vertices.
  bool is_mandatory_vertex(VertexId v);
  // Mandatory vertices adjacent to In, sorted, from one linear-time
  // lowpoint DFS of the component.
  std::vector<VertexId> mandatory_vertices_all();

  // Amortized O(m) per solution: absorbs every mandatory neighbour, then
  // branches on a non-mandatory one.
  void lin_enum_v(SolutionSink emit);
  // Amortized O(k^2) per solution. Falls back to lin_enum_v when both
  // probed neighbours are mandatory, which forces a component of < 2k
  // vertices.
  void enum_v(SolutionSink emit);

 private:
  void push(VertexId v);
  void pop_to(std::size_t size);
  void emit_current(SolutionSink emit);
  void emit_with_each_neighbor(SolutionSink emit);
  std::pair<VertexId, VertexId> two_neighbors() const;
  std::vector<std::uint8_t> mandatory_mask();
  void lin_recurse(SolutionSink emit);
  void recurse(SolutionSink emit);

  DynGraph* g_;
  std::uint32_t k_;
  std::vector<VertexId> in_;
  std::vector<std::uint8_t> in_mark_;
  LimitedVertexBfs bfs_;
  StampSet neighbor_seen_;
  std::uint64_t limit_ = 0;
  std::uint64_t emitted_ = 0;
};

// Every k-graphlet of g exactly once. Instances are seeded along a reversed
// BFS order of each component; seed i is deleted after its instance.
// Returns the number of solutions emitted.
std::uint64_t enumerate_vertex_graphlets(DynGraph& g, std::uint32_t k, SolutionSink emit,
                                         std::uint64_t limit = 0);

}  // namespace kgraphlet
