#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kgraphlet/dyn_graph.hpp"

namespace kgraphlet {

// Membership set over a dense id universe with O(1) clear. Optionally keeps
// one 32-bit payload per member.
class StampSet {
 public:
  StampSet() = default;
  explicit StampSet(std::size_t universe) : stamp_(universe, 0), value_(universe, 0) {}

  void resize(std::size_t universe) {
    stamp_.assign(universe, 0);
    value_.assign(universe, 0);
    epoch_ = 1;
  }
  void clear() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  bool contains(std::uint32_t id) const { return stamp_[id] == epoch_; }
  // Returns false if id was already present.
  bool insert(std::uint32_t id, std::uint32_t value = 0) {
    if (stamp_[id] == epoch_) return false;
    stamp_[id] = epoch_;
    value_[id] = value;
    return true;
  }
  std::uint32_t value(std::uint32_t id) const { return value_[id]; }
  void set_value(std::uint32_t id, std::uint32_t value) { value_[id] = value; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> value_;
  std::uint32_t epoch_ = 1;
};

// Breadth-first search that stops as soon as `limit` vertices are known.
// Reusable: buffers are sized once to the graph's vertex capacity.
class LimitedVertexBfs {
 public:
  explicit LimitedVertexBfs(const DynGraph& g) : g_(&g), seen_(g.vertex_capacity()) {}

  // Sources are counted towards the limit and must not equal `excluded`.
  // Cost O(min{m, limit^2, limit * max_degree}).
  std::span<const VertexId> run(std::span<const VertexId> sources, std::size_t limit,
                                VertexId excluded = kNoVertex);

 private:
  const DynGraph* g_;
  StampSet seen_;
  std::vector<VertexId> order_;
};

std::vector<VertexId> bfs_vertices_limited(const DynGraph& g,
                                           std::span<const VertexId> sources,
                                           std::size_t limit,
                                           VertexId excluded = kNoVertex);

struct EdgeAtDistance {
  EdgeId edge;
  std::uint32_t dist;
};

struct VertexAtDistance {
  VertexId vertex;
  std::uint32_t dist;
};

// Distance-bounded multi-source BFS over edges. dist(S, e) is the BFS
// distance of the nearer endpoint of e. Only vertices with distance at most
// max_dist are scanned, so the cost is proportional to the number of edges
// reported.
class EdgeBall {
 public:
  explicit EdgeBall(const DynGraph& g)
      : g_(&g), vertex_dist_(g.vertex_capacity()), edge_seen_(g.edge_capacity()) {}

  // Collects every alive edge with dist <= max_dist, each exactly once, in
  // nondecreasing distance order. Returns the number of such edges.
  std::size_t run(std::span<const VertexId> sources, std::uint32_t max_dist);
  // Same reach, but only counts edges; no edge list is materialized.
  std::size_t count(std::span<const VertexId> sources, std::uint32_t max_dist);

  std::span<const EdgeAtDistance> edges() const { return edges_; }
  // Discovered vertices in BFS order; includes the layer max_dist + 1.
  std::span<const VertexId> vertices() const { return order_; }
  bool reached(VertexId v) const { return vertex_dist_.contains(v); }
  std::uint32_t dist(VertexId v) const { return vertex_dist_.value(v); }

 private:
  template <bool kCollect>
  std::size_t explore(std::span<const VertexId> sources, std::uint32_t max_dist);

  const DynGraph* g_;
  StampSet vertex_dist_;
  StampSet edge_seen_;
  std::vector<VertexId> order_;
  std::vector<EdgeAtDistance> edges_;
};

struct EdgeBallResult {
  std::vector<EdgeAtDistance> edges;
  std::vector<VertexAtDistance> vertices;
};

EdgeBallResult bfs_edges_within(const DynGraph& g, std::span<const VertexId> sources,
                                std::uint32_t max_dist);

// Reversed BFS discovery order of the vertices (resp. edges) of the
// component containing root. Every suffix induces a connected subgraph.
std::vector<VertexId> reversed_bfs_vertices(const DynGraph& g, VertexId root);
std::vector<EdgeId> reversed_bfs_edges(const DynGraph& g, VertexId root);

// Alive vertices grouped by connected component, each group in BFS order.
std::vector<std::vector<VertexId>> connected_components(const DynGraph& g);

}  // namespace kgraphlet
