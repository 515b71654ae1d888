#include "kgraphlet/decomposition.hpp"

#include <algorithm>

namespace kgraphlet {

std::uint32_t LocalGraphBuilder::intern(VertexId v, LocalGraph& out) {
  if (local_.contains(v)) return local_.value(v);
  const auto id = static_cast<std::uint32_t>(out.global_.size());
  local_.insert(v, id);
  out.global_.push_back(v);
  return id;
}

void LocalGraphBuilder::finish(LocalGraph& out) {
  const std::uint32_t n = out.num_vertices();
  out.offset_.assign(n + 1, 0);
  for (const auto& [a, b] : pending_) {
    ++out.offset_[a + 1];
    ++out.offset_[b + 1];
  }
  for (std::uint32_t v = 0; v < n; ++v) out.offset_[v + 1] += out.offset_[v];
  out.arcs_.resize(2 * pending_.size());
  std::vector<std::uint32_t> fill(out.offset_.begin(), out.offset_.end() - 1);
  for (std::size_t i = 0; i < pending_.size(); ++i) {
    const auto [a, b] = pending_[i];
    out.arcs_[fill[a]++] = {b, pending_ids_[i]};
    out.arcs_[fill[b]++] = {a, pending_ids_[i]};
  }
}

void LocalGraphBuilder::from_edges(VertexId first, std::span<const EdgeAtDistance> edges,
                                   LocalGraph& out) {
  local_.clear();
  out.global_.clear();
  pending_.clear();
  pending_ids_.clear();
  intern(first, out);
  for (const auto& item : edges) {
    const auto [a, b] = g_->endpoints(item.edge);
    pending_.emplace_back(intern(a, out), intern(b, out));
    pending_ids_.push_back(item.edge);
  }
  finish(out);
}

void LocalGraphBuilder::from_component(VertexId root, LocalGraph& out) {
  local_.clear();
  out.global_.clear();
  pending_.clear();
  pending_ids_.clear();
  intern(root, out);
  // Local ids follow BFS order, so y is already scanned iff local(y) < head.
  for (std::uint32_t head = 0; head < out.global_.size(); ++head) {
    for (const auto [e, y] : g_->incident(out.global_[head])) {
      const std::uint32_t ly = intern(y, out);
      if (ly > head) {
        pending_.emplace_back(head, ly);
        pending_ids_.push_back(e);
      }
    }
  }
  finish(out);
}

void compute_lowpoints(const LocalGraph& h, LowpointTree& out) {
  constexpr std::uint32_t kUnset = kNoVertex;
  const std::uint32_t n = h.num_vertices();
  out.preorder.clear();
  out.disc.assign(n, kUnset);
  out.low.assign(n, kUnset);
  out.parent.assign(n, kNoVertex);
  out.parent_edge.assign(n, kNoEdge);
  out.subtree_size.assign(n, 1);
  out.subtree_degree.assign(n, 0);
  if (n == 0) return;

  struct Frame {
    std::uint32_t v;
    std::uint32_t next_arc;
  };
  std::vector<Frame> stack;
  std::uint32_t timer = 0;
  auto discover = [&](std::uint32_t v) {
    out.disc[v] = out.low[v] = timer++;
    out.subtree_degree[v] = h.arcs(v).size();
    out.preorder.push_back(v);
    stack.push_back({v, 0});
  };
  discover(0);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const std::uint32_t v = top.v;
    const auto arcs = h.arcs(v);
    if (top.next_arc < arcs.size()) {
      const auto arc = arcs[top.next_arc++];
      if (arc.edge == out.parent_edge[v]) continue;
      if (out.disc[arc.to] == kUnset) {
        out.parent[arc.to] = v;
        out.parent_edge[arc.to] = arc.edge;
        discover(arc.to);
      } else {
        out.low[v] = std::min(out.low[v], out.disc[arc.to]);
      }
      continue;
    }
    stack.pop_back();
    const std::uint32_t p = out.parent[v];
    if (p != kNoVertex) {
      out.low[p] = std::min(out.low[p], out.low[v]);
      out.subtree_size[p] += out.subtree_size[v];
      out.subtree_degree[p] += out.subtree_degree[v];
    }
  }
}

BridgeTree bridge_decomposition(const DynGraph& g, VertexId component_of) {
  KG_REQUIRE(g.vertex_alive(component_of), "bridge_decomposition: vertex not alive");
  LocalGraphBuilder builder(g);
  LocalGraph h;
  builder.from_component(component_of, h);
  LowpointTree t;
  compute_lowpoints(h, t);

  BridgeTree out;
  out.component_edges = h.num_edges();
  std::vector<std::uint32_t> comp(h.num_vertices(), 0);
  out.components.emplace_back();
  for (const std::uint32_t c : t.preorder) {
    if (c == 0) {
      comp[c] = 0;
    } else if (t.is_bridge_child(c)) {
      comp[c] = static_cast<std::uint32_t>(out.components.size());
      out.components.emplace_back();
      const std::uint32_t p = t.parent[c];
      out.bridges.push_back({t.parent_edge[c], comp[p], comp[c], h.global(p), h.global(c),
                             (t.subtree_degree[c] + 1) / 2, t.subtree_size[c]});
    } else {
      comp[c] = comp[t.parent[c]];
    }
    out.components[comp[c]].push_back(h.global(c));
  }
  for (auto& members : out.components) std::sort(members.begin(), members.end());
  out.tree_adjacency.resize(out.components.size());
  for (std::uint32_t i = 0; i < out.bridges.size(); ++i) {
    out.tree_adjacency[out.bridges[i].parent_component].push_back(i);
    out.tree_adjacency[out.bridges[i].child_component].push_back(i);
  }
  return out;
}

BlockCutTree articulation_points(const DynGraph& g, VertexId component_of) {
  KG_REQUIRE(g.vertex_alive(component_of), "articulation_points: vertex not alive");
  LocalGraphBuilder builder(g);
  LocalGraph h;
  builder.from_component(component_of, h);
  LowpointTree t;
  compute_lowpoints(h, t);

  BlockCutTree out;
  const std::uint32_t n = h.num_vertices();
  if (n == 1) {
    out.blocks.push_back({component_of});
    return out;
  }
  std::vector<std::uint8_t> is_cut(n, 0);
  std::uint32_t root_children = 0;
  // own[v]: the block in which v is not the attaching vertex.
  std::vector<std::uint32_t> own(n, kNoVertex);
  for (const std::uint32_t c : t.preorder) {
    if (c == 0) continue;
    const std::uint32_t p = t.parent[c];
    if (p == 0) ++root_children;
    if (t.separates_child(c)) {
      if (p != 0) is_cut[p] = 1;
      own[c] = static_cast<std::uint32_t>(out.blocks.size());
      out.blocks.push_back({h.global(p), h.global(c)});
    } else {
      own[c] = own[p];
      out.blocks[own[c]].push_back(h.global(c));
    }
  }
  if (root_children >= 2) is_cut[0] = 1;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (is_cut[v]) out.articulation_points.push_back(h.global(v));
  }
  std::sort(out.articulation_points.begin(), out.articulation_points.end());
  for (auto& block : out.blocks) std::sort(block.begin(), block.end());
  return out;
}

}  // namespace kgraphlet
