#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kgraphlet/dyn_graph.hpp"
#include "kgraphlet/traversal.hpp"

namespace kgraphlet {

// Returns false to stop the enumeration early.
using PathSink = FunctionRef<bool(std::span<const EdgeId>)>;

// BFS layering from a source set, truncated at `depth`, together with the
// forward edges {x, y} with layer(y) = layer(x) + 1. Every vertex on a layer
// i >= 1 has an in-edge from layer i - 1, so walking in-edges backwards from
// any vertex always reaches layer 0.
//
// The object keeps capacity-sized scratch arrays and can be rebuilt many
// times; each build costs time proportional to the explored ball.
class LayeredDag {
 public:
  struct InArc {
    EdgeId edge;
    VertexId from;
  };

  explicit LayeredDag(const DynGraph& g);

  void build(std::span<const VertexId> sources, std::uint32_t depth);

  std::uint32_t depth() const { return depth_; }
  bool contains(VertexId v) const { return layer_.contains(v); }
  // Layer of a vertex reached by the last build.
  std::uint32_t layer(VertexId v) const { return layer_.value(v); }
  std::span<const VertexId> vertices() const { return order_; }
  std::span<const InArc> in_arcs(VertexId v) const;

  // Emits every shortest source->target path once, as its edges listed from
  // the target back to the source. Requires layer(target) == depth().
  // O(depth) per path. Returns the number of paths.
  std::uint64_t enumerate_paths(VertexId target, PathSink emit);

 private:
  const DynGraph* g_;
  std::uint32_t depth_ = 0;
  StampSet layer_;
  StampSet slot_;  // vertex -> index into offset_
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> offset_;
  std::vector<InArc> arcs_;
  std::vector<std::pair<std::uint32_t, InArc>> pending_;
  std::vector<std::pair<VertexId, std::uint32_t>> stack_;
  std::vector<EdgeId> path_;
};

// Convenience wrapper: builds a fresh DAG and enumerates paths to target.
std::uint64_t enumerate_shortest_paths(const DynGraph& g, std::span<const VertexId> sources,
                                       VertexId target, PathSink emit);

}  // namespace kgraphlet
