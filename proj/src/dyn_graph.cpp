#include "kgraphlet/dyn_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace kgraphlet {

DynGraph::DynGraph(VertexId num_vertices,
                   std::span<const std::pair<VertexId, VertexId>> edges)
    : endpoints_(edges.begin(), edges.end()),
      edge_alive_(edges.size(), 1),
      vertex_alive_(num_vertices, 1),
      degree_(num_vertices, 0),
      next_(2 * edges.size() + num_vertices),
      prev_(2 * edges.size() + num_vertices),
      owner_(2 * edges.size()),
      n_live_(num_vertices),
      m_live_(edges.size()) {
  if (edges.size() >= (std::size_t{1} << 31) - num_vertices) {
    throw std::invalid_argument("graph too large for 32-bit half-edge ids");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    if (a >= num_vertices || b >= num_vertices) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  " has an endpoint out of range");
    }
    if (a == b) {
      throw std::invalid_argument("edge " + std::to_string(i) + " is a self-loop");
    }
    const std::uint64_t key = (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("edge " + std::to_string(i) + " is a duplicate");
    }
  }

  for (VertexId v = 0; v < num_vertices; ++v) {
    const auto s = sentinel(v);
    next_[s] = s;
    prev_[s] = s;
  }
  // Append each half-edge at the tail of its owner's list so iteration order
  // follows input order.
  for (std::uint32_t h = 0; h < 2 * edges.size(); ++h) {
    const auto [a, b] = edges[h >> 1];
    const VertexId v = (h & 1u) ? b : a;
    owner_[h] = v;
    const auto s = sentinel(v);
    const auto tail = prev_[s];
    next_[tail] = h;
    prev_[h] = tail;
    next_[h] = s;
    prev_[s] = h;
    ++degree_[v];
  }
}

std::uint32_t DynGraph::max_degree() const {
  std::uint32_t best = 0;
  for (VertexId v = 0; v < vertex_capacity(); ++v) {
    if (vertex_alive_[v]) best = std::max(best, degree_[v]);
  }
  return best;
}

void DynGraph::push_log(OpKind kind, std::uint32_t id) {
  log_.push_back({kind, id, ++serial_});
}

void DynGraph::delete_edge(EdgeId e) {
  KG_REQUIRE(e < edge_capacity(), "delete_edge: edge id out of range");
  KG_REQUIRE(edge_alive_[e], "delete_edge: edge already deleted");
  unlink(2 * e);
  unlink(2 * e + 1);
  edge_alive_[e] = 0;
  --degree_[endpoints_[e].first];
  --degree_[endpoints_[e].second];
  --m_live_;
  push_log(OpKind::kEdge, e);
}

void DynGraph::delete_vertex(VertexId v) {
  KG_REQUIRE(v < vertex_capacity(), "delete_vertex: vertex id out of range");
  KG_REQUIRE(vertex_alive_[v], "delete_vertex: vertex already deleted");
  const auto s = sentinel(v);
  while (next_[s] != s) delete_edge(next_[s] >> 1);
  vertex_alive_[v] = 0;
  --n_live_;
  push_log(OpKind::kVertex, v);
}

Checkpoint DynGraph::checkpoint() const {
  return {log_.size(), log_.empty() ? 0 : log_.back().serial};
}

void DynGraph::rollback(Checkpoint cp) {
  KG_REQUIRE(cp.depth <= log_.size(), "rollback: checkpoint already consumed");
  KG_REQUIRE(cp.depth == 0 || log_[cp.depth - 1].serial == cp.last_serial,
             "rollback: checkpoint belongs to a discarded history");
  while (log_.size() > cp.depth) {
    const LogEntry op = log_.back();
    log_.pop_back();
    if (op.kind == OpKind::kVertex) {
      vertex_alive_[op.id] = 1;
      ++n_live_;
    } else {
      const EdgeId e = op.id;
      relink(2 * e + 1);
      relink(2 * e);
      edge_alive_[e] = 1;
      ++degree_[endpoints_[e].first];
      ++degree_[endpoints_[e].second];
      ++m_live_;
    }
  }
}

CanonicalForm DynGraph::canonical() const {
  CanonicalForm out;
  for (VertexId v = 0; v < vertex_capacity(); ++v) {
    if (vertex_alive_[v]) out.vertices.push_back(v);
  }
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (!edge_alive_[e]) continue;
    const auto [a, b] = endpoints_[e];
    out.edges.push_back({std::min(a, b), std::max(a, b), e});
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace kgraphlet
