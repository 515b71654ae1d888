#include "kgraphlet/shortest_paths.hpp"

#include <limits>

namespace kgraphlet {

LayeredDag::LayeredDag(const DynGraph& g)
    : g_(&g), layer_(g.vertex_capacity()), slot_(g.vertex_capacity()) {}

void LayeredDag::build(std::span<const VertexId> sources, std::uint32_t depth) {
  depth_ = depth;
  layer_.clear();
  slot_.clear();
  order_.clear();
  pending_.clear();
  for (const VertexId s : sources) {
    if (layer_.insert(s, 0)) {
      slot_.insert(s, static_cast<std::uint32_t>(order_.size()));
      order_.push_back(s);
    }
  }
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const VertexId x = order_[head];
    const std::uint32_t lx = layer_.value(x);
    if (lx >= depth) break;
    for (const auto [e, y] : g_->incident(x)) {
      if (layer_.insert(y, lx + 1)) {
        slot_.insert(y, static_cast<std::uint32_t>(order_.size()));
        order_.push_back(y);
      }
      if (layer_.value(y) == lx + 1) pending_.push_back({slot_.value(y), {e, x}});
    }
  }
  offset_.assign(order_.size() + 1, 0);
  for (const auto& [slot, arc] : pending_) ++offset_[slot + 1];
  for (std::size_t i = 0; i < order_.size(); ++i) offset_[i + 1] += offset_[i];
  arcs_.resize(pending_.size());
  std::vector<std::uint32_t> fill(offset_.begin(), offset_.end() - 1);
  for (const auto& [slot, arc] : pending_) arcs_[fill[slot]++] = arc;
}

std::span<const LayeredDag::InArc> LayeredDag::in_arcs(VertexId v) const {
  if (!slot_.contains(v)) return {};
  const std::uint32_t s = slot_.value(v);
  return {arcs_.data() + offset_[s], arcs_.data() + offset_[s + 1]};
}

std::uint64_t LayeredDag::enumerate_paths(VertexId target, PathSink emit) {
  KG_REQUIRE(contains(target) && layer(target) == depth_,
             "enumerate_paths: target is not on the last layer");
  std::uint64_t count = 0;
  stack_.clear();
  path_.clear();
  stack_.push_back({target, 0});
  while (!stack_.empty()) {
    auto& [v, next] = stack_.back();
    if (layer(v) == 0) {
      ++count;
      if (!emit(path_)) break;
      stack_.pop_back();
      if (!path_.empty()) path_.pop_back();
      continue;
    }
    const auto arcs = in_arcs(v);
    if (next < arcs.size()) {
      const InArc arc = arcs[next++];
      path_.push_back(arc.edge);
      stack_.push_back({arc.from, 0});
    } else {
      stack_.pop_back();
      if (!path_.empty()) path_.pop_back();
    }
  }
  return count;
}

std::uint64_t enumerate_shortest_paths(const DynGraph& g, std::span<const VertexId> sources,
                                       VertexId target, PathSink emit) {
  LayeredDag dag(g);
  dag.build(sources, std::numeric_limits<std::uint32_t>::max() - 1);
  if (!dag.contains(target)) return 0;
  dag.build(sources, dag.layer(target));
  return dag.enumerate_paths(target, emit);
}

}  // namespace kgraphlet
