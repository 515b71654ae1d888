#include "kgraphlet/traversal.hpp"

#include <algorithm>

namespace kgraphlet {

std::span<const VertexId> LimitedVertexBfs::run(std::span<const VertexId> sources,
                                                std::size_t limit, VertexId excluded) {
  seen_.clear();
  order_.clear();
  if (limit == 0) return {};
  for (const VertexId s : sources) {
    if (s == excluded || !seen_.insert(s)) continue;
    order_.push_back(s);
    if (order_.size() >= limit) return order_;
  }
  for (std::size_t head = 0; head < order_.size(); ++head) {
    for (const auto [e, y] : g_->incident(order_[head])) {
      if (y == excluded || !seen_.insert(y)) continue;
      order_.push_back(y);
      if (order_.size() >= limit) return order_;
    }
  }
  return order_;
}

std::vector<VertexId> bfs_vertices_limited(const DynGraph& g,
                                           std::span<const VertexId> sources,
                                           std::size_t limit, VertexId excluded) {
  LimitedVertexBfs bfs(g);
  const auto found = bfs.run(sources, limit, excluded);
  return {found.begin(), found.end()};
}

template <bool kCollect>
std::size_t EdgeBall::explore(std::span<const VertexId> sources, std::uint32_t max_dist) {
  vertex_dist_.clear();
  edge_seen_.clear();
  order_.clear();
  edges_.clear();
  std::size_t found = 0;
  for (const VertexId s : sources) {
    if (vertex_dist_.insert(s, 0)) order_.push_back(s);
  }
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const VertexId x = order_[head];
    const std::uint32_t dx = vertex_dist_.value(x);
    if (dx > max_dist) break;  // BFS order: every later vertex is as far
    for (const auto [e, y] : g_->incident(x)) {
      if (vertex_dist_.insert(y, dx + 1)) order_.push_back(y);
      // An edge is first met from its nearer endpoint.
      if (!edge_seen_.insert(e)) continue;
      ++found;
      if constexpr (kCollect) edges_.push_back({e, dx});
    }
  }
  return found;
}

std::size_t EdgeBall::run(std::span<const VertexId> sources, std::uint32_t max_dist) {
  return explore<true>(sources, max_dist);
}

std::size_t EdgeBall::count(std::span<const VertexId> sources, std::uint32_t max_dist) {
  return explore<false>(sources, max_dist);
}

EdgeBallResult bfs_edges_within(const DynGraph& g, std::span<const VertexId> sources,
                                std::uint32_t max_dist) {
  EdgeBall ball(g);
  ball.run(sources, max_dist);
  EdgeBallResult out;
  out.edges.assign(ball.edges().begin(), ball.edges().end());
  for (const VertexId v : ball.vertices()) out.vertices.push_back({v, ball.dist(v)});
  return out;
}

std::vector<VertexId> reversed_bfs_vertices(const DynGraph& g, VertexId root) {
  std::vector<VertexId> order{root};
  std::vector<std::uint8_t> seen(g.vertex_capacity(), 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto [e, y] : g.incident(order[head])) {
      if (!seen[y]) {
        seen[y] = 1;
        order.push_back(y);
      }
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<EdgeId> reversed_bfs_edges(const DynGraph& g, VertexId root) {
  std::vector<VertexId> queue{root};
  std::vector<std::uint8_t> seen(g.vertex_capacity(), 0);
  std::vector<std::uint8_t> edge_seen(g.edge_capacity(), 0);
  std::vector<EdgeId> order;
  seen[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto [e, y] : g.incident(queue[head])) {
      if (!edge_seen[e]) {
        edge_seen[e] = 1;
        order.push_back(e);
      }
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<std::vector<VertexId>> connected_components(const DynGraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<std::uint8_t> seen(g.vertex_capacity(), 0);
  for (VertexId r = 0; r < g.vertex_capacity(); ++r) {
    if (!g.vertex_alive(r) || seen[r]) continue;
    auto& comp = out.emplace_back();
    comp.push_back(r);
    seen[r] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const auto [e, y] : g.incident(comp[head])) {
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
      }
    }
  }
  return out;
}

}  // namespace kgraphlet
