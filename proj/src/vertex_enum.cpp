#include "kgraphlet/vertex_enum.hpp"

#include <algorithm>

#include "kgraphlet/decomposition.hpp"

namespace kgraphlet {

VertexGraphletEnumerator::VertexGraphletEnumerator(DynGraph& g, std::uint32_t k)
    : g_(&g),
      k_(k),
      in_mark_(g.vertex_capacity(), 0),
      bfs_(g),
      neighbor_seen_(g.vertex_capacity()) {
  KG_REQUIRE(k >= 1, "k must be at least 1");
}

void VertexGraphletEnumerator::reset(std::span<const VertexId> in) {
  pop_to(0);
  for (const VertexId v : in) {
    KG_REQUIRE(g_->vertex_alive(v), "seed vertex is not alive");
    push(v);
  }
}

void VertexGraphletEnumerator::push(VertexId v) {
  in_.push_back(v);
  in_mark_[v] = 1;
}

void VertexGraphletEnumerator::pop_to(std::size_t size) {
  while (in_.size() > size) {
    in_mark_[in_.back()] = 0;
    in_.pop_back();
  }
}

void VertexGraphletEnumerator::emit_current(SolutionSink emit) {
  emit(in_);
  ++emitted_;
}

bool VertexGraphletEnumerator::has_solution() {
  return bfs_.run(in_, k_).size() >= k_;
}

bool VertexGraphletEnumerator::is_mandatory_vertex(VertexId v) {
  return bfs_.run(in_, k_, v).size() < k_;
}

void VertexGraphletEnumerator::emit_with_each_neighbor(SolutionSink emit) {
  neighbor_seen_.clear();
  for (std::size_t i = 0, n = in_.size(); i < n && !stopped(); ++i) {
    for (const auto [e, u] : g_->incident(in_[i])) {
      if (in_mark_[u] || !neighbor_seen_.insert(u)) continue;
      in_.push_back(u);
      emit_current(emit);
      in_.pop_back();
      if (stopped()) return;
    }
  }
}

// First two distinct vertices of N(In) in incidence-list order. Stops as
// soon as the second one is found, which bounds the scan by O(k^2) edges.
std::pair<VertexId, VertexId> VertexGraphletEnumerator::two_neighbors() const {
  VertexId first = kNoVertex;
  for (const VertexId v : in_) {
    for (const auto [e, u] : g_->incident(v)) {
      if (in_mark_[u]) continue;
      if (first == kNoVertex) {
        first = u;
      } else if (u != first) {
        return {first, u};
      }
    }
  }
  return {first, kNoVertex};
}

std::vector<std::uint8_t> VertexGraphletEnumerator::mandatory_mask() {
  // Root the DFS inside In. For v outside In, the component of In in G - v
  // is the root side: everything except v and the child subtrees that v
  // separates.
  LocalGraphBuilder builder(*g_);
  LocalGraph h;
  builder.from_component(in_.front(), h);
  LowpointTree t;
  compute_lowpoints(h, t);

  const std::uint32_t n = h.num_vertices();
  std::vector<std::uint64_t> separated(n, 0);
  for (std::uint32_t c = 1; c < n; ++c) {
    if (t.separates_child(c)) separated[t.parent[c]] += t.subtree_size[c];
  }
  std::vector<std::uint8_t> mask(g_->vertex_capacity(), 0);
  for (std::uint32_t v = 1; v < n; ++v) {
    const VertexId gv = h.global(v);
    if (in_mark_[gv]) continue;
    const std::uint64_t remaining = n - 1 - separated[v];
    if (remaining + 1 <= k_) mask[gv] = 1;
  }
  return mask;
}

std::vector<VertexId> VertexGraphletEnumerator::mandatory_vertices_all() {
  KG_REQUIRE(!in_.empty(), "mandatory_vertices_all: empty seed set");
  const auto mask = mandatory_mask();
  std::vector<VertexId> out;
  for (const VertexId v : in_) {
    for (const auto [e, u] : g_->incident(v)) {
      if (mask[u]) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void VertexGraphletEnumerator::lin_enum_v(SolutionSink emit) {
  KG_REQUIRE(!in_.empty(), "lin_enum_v: empty seed set");
  lin_recurse(emit);
}

void VertexGraphletEnumerator::enum_v(SolutionSink emit) {
  KG_REQUIRE(!in_.empty(), "enum_v: empty seed set");
  recurse(emit);
}

void VertexGraphletEnumerator::lin_recurse(SolutionSink emit) {
  const Checkpoint cp = g_->checkpoint();
  const std::size_t base = in_.size();
  // The exclusion branch is a tail call; it is run as the next loop
  // iteration so that recursion depth stays bounded by k.
  while (!stopped()) {
    if (in_.size() >= k_) {
      emit_current(emit);
      break;
    }
    // Absorbing a mandatory vertex keeps In on the same side of every other
    // vertex, so the mask stays valid while In grows.
    const auto mandatory = mandatory_mask();
    bool complete = false;
    for (std::size_t i = 0; i < in_.size() && !complete; ++i) {
      for (const auto [e, u] : g_->incident(in_[i])) {
        if (in_mark_[u] || !mandatory[u]) continue;
        push(u);
        if (in_.size() == k_) {
          complete = true;
          break;
        }
      }
    }
    if (complete) {
      emit_current(emit);
      break;
    }
    const VertexId v = two_neighbors().first;
    if (v == kNoVertex) break;
    const std::size_t before = in_.size();
    push(v);
    lin_recurse(emit);
    pop_to(before);
    if (stopped()) break;
    g_->delete_vertex(v);
    if (!has_solution()) break;
  }
  pop_to(base);
  g_->rollback(cp);
}

void VertexGraphletEnumerator::recurse(SolutionSink emit) {
  const Checkpoint cp = g_->checkpoint();
  const std::size_t base = in_.size();
  while (!stopped()) {
    if (in_.size() >= k_) {
      emit_current(emit);
      break;
    }
    if (in_.size() + 1 == k_) {
      emit_with_each_neighbor(emit);
      break;
    }
    const auto [x, y] = two_neighbors();
    if (x == kNoVertex) break;
    if (y == kNoVertex) {
      // N(In) = {x}: x is in every solution.
      push(x);
      continue;
    }
    VertexId z = kNoVertex;
    if (!is_mandatory_vertex(x)) {
      z = x;
    } else if (!is_mandatory_vertex(y)) {
      z = y;
    }
    if (z == kNoVertex) {
      KG_REQUIRE(bfs_.run(in_, 2 * std::size_t{k_}).size() < 2 * std::size_t{k_},
                 "two mandatory neighbours in a component of >= 2k vertices");
      lin_recurse(emit);
      break;
    }
    const std::size_t before = in_.size();
    push(z);
    if (has_solution()) recurse(emit);
    pop_to(before);
    if (stopped()) break;
    g_->delete_vertex(z);
    if (!has_solution()) break;
  }
  pop_to(base);
  g_->rollback(cp);
}

std::uint64_t enumerate_vertex_graphlets(DynGraph& g, std::uint32_t k, SolutionSink emit,
                                         std::uint64_t limit) {
  KG_REQUIRE(k >= 1, "k must be at least 1");
  const Checkpoint cp = g.checkpoint();
  VertexGraphletEnumerator en(g, k);
  en.set_limit(limit);
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < k) continue;
    const auto order = reversed_bfs_vertices(g, comp.front());
    for (std::size_t i = 0; i + k <= order.size() && !en.stopped(); ++i) {
      const VertexId seed = order[i];
      en.reset({&seed, 1});
      if (en.has_solution()) en.enum_v(emit);
      g.delete_vertex(seed);
    }
    if (en.stopped()) break;
  }
  en.reset({});
  g.rollback(cp);
  return en.emitted();
}

}  // namespace kgraphlet
