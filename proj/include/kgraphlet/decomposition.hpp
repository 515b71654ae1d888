#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kgraphlet/dyn_graph.hpp"
#include "kgraphlet/traversal.hpp"

namespace kgraphlet {

// Compact static snapshot of a connected subgraph: local vertex ids
// 0..size-1, CSR adjacency, global ids kept alongside.
class LocalGraph {
 public:
  struct Arc {
    std::uint32_t to;  // local vertex
    EdgeId edge;       // global edge id
  };

  std::uint32_t num_vertices() const { return static_cast<std::uint32_t>(global_.size()); }
  std::size_t num_edges() const { return arcs_.size() / 2; }
  VertexId global(std::uint32_t local) const { return global_[local]; }
  std::span<const Arc> arcs(std::uint32_t local) const {
    return {arcs_.data() + offset_[local], arcs_.data() + offset_[local + 1]};
  }

  friend class LocalGraphBuilder;

 private:
  std::vector<VertexId> global_;
  std::vector<std::uint32_t> offset_;
  std::vector<Arc> arcs_;
};

// Builds LocalGraphs in time proportional to the snapshot, reusing a
// capacity-sized global->local map.
class LocalGraphBuilder {
 public:
  explicit LocalGraphBuilder(const DynGraph& g) : g_(&g), local_(g.vertex_capacity()) {}

  // Snapshot of the given edges. `first` becomes local vertex 0.
  void from_edges(VertexId first, std::span<const EdgeAtDistance> edges, LocalGraph& out);
  // Snapshot of the whole connected component of root (root is local 0).
  void from_component(VertexId root, LocalGraph& out);

  // Local id of a global vertex placed by the last build, or kNoVertex.
  std::uint32_t local_of(VertexId v) const {
    return local_.contains(v) ? local_.value(v) : kNoVertex;
  }

 private:
  std::uint32_t intern(VertexId v, LocalGraph& out);
  void finish(LocalGraph& out);

  const DynGraph* g_;
  StampSet local_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending_;
  std::vector<EdgeId> pending_ids_;
};

// Iterative DFS from local vertex 0 with Tarjan lowpoints and per-subtree
// aggregates. Arrays are indexed by local vertex id.
struct LowpointTree {
  std::vector<std::uint32_t> preorder;     // local ids in discovery order
  std::vector<std::uint32_t> disc;
  std::vector<std::uint32_t> low;
  std::vector<std::uint32_t> parent;       // kNoVertex for the root
  std::vector<EdgeId> parent_edge;         // global id, kNoEdge for the root
  std::vector<std::uint32_t> subtree_size; // vertices in the DFS subtree
  std::vector<std::uint64_t> subtree_degree;  // sum of degrees in the subtree

  // Tree edge parent(c)-c is a bridge.
  bool is_bridge_child(std::uint32_t c) const {
    return parent[c] != kNoVertex && low[c] > disc[parent[c]];
  }
  // Removing parent(c) separates c's subtree from the root side.
  bool separates_child(std::uint32_t c) const {
    return parent[c] != kNoVertex && low[c] >= disc[parent[c]];
  }
};

void compute_lowpoints(const LocalGraph& h, LowpointTree& out);

// Decomposition of one connected component into 2-edge-connected components
// joined by bridges, rooted at the component of a designated vertex.
struct BridgeTree {
  struct Bridge {
    EdgeId edge;
    std::uint32_t parent_component;
    std::uint32_t child_component;
    VertexId parent_vertex;  // endpoint on the root side
    VertexId child_vertex;
    // Edges disconnected from the root side when the bridge is removed,
    // the bridge itself included.
    std::uint64_t edge_loss;
    // Vertices disconnected from the root side.
    std::uint64_t vertex_loss;
  };

  std::vector<std::vector<VertexId>> components;  // components[0] holds the root
  std::vector<Bridge> bridges;
  // tree_adjacency[c]: indices into `bridges` incident to component c.
  std::vector<std::vector<std::uint32_t>> tree_adjacency;
  std::size_t component_edges = 0;
};

BridgeTree bridge_decomposition(const DynGraph& g, VertexId component_of);

// Articulation points and biconnected blocks (as vertex sets) of the
// component containing a vertex.
struct BlockCutTree {
  std::vector<VertexId> articulation_points;  // sorted
  std::vector<std::vector<VertexId>> blocks;
};

BlockCutTree articulation_points(const DynGraph& g, VertexId component_of);

}  // namespace kgraphlet
