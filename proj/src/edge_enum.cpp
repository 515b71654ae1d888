#include "kgraphlet/edge_enum.hpp"

namespace kgraphlet {

EdgeGraphletEnumerator::EdgeGraphletEnumerator(DynGraph& g, std::uint32_t k, EdgeMode mode)
    : g_(&g),
      k_(k),
      mode_(mode),
      in_edge_mark_(g.edge_capacity(), 0),
      vin_count_(g.vertex_capacity(), 0),
      ball_(g),
      builder_(g),
      mandatory_(g.edge_capacity()),
      dag_(g),
      scratch_vertices_(g.vertex_capacity()) {
  KG_REQUIRE(k >= 1, "k must be at least 1");
}

EdgeGraphletEnumerator::~EdgeGraphletEnumerator() {
  pop_to(0);
  if (reset_active_) g_->rollback(reset_cp_);
}

void EdgeGraphletEnumerator::push_edge(EdgeId e) {
  in_.push_back(e);
  in_edge_mark_[e] = 1;
  const auto [a, b] = g_->endpoints(e);
  if (vin_count_[a]++ == 0) vin_.push_back(a);
  if (vin_count_[b]++ == 0) vin_.push_back(b);
}

void EdgeGraphletEnumerator::pop_to(std::size_t size) {
  while (in_.size() > size) {
    const EdgeId e = in_.back();
    in_.pop_back();
    in_edge_mark_[e] = 0;
    const auto [a, b] = g_->endpoints(e);
    if (--vin_count_[b] == 0) vin_.pop_back();
    if (--vin_count_[a] == 0) vin_.pop_back();
  }
}

void EdgeGraphletEnumerator::reset(std::span<const EdgeId> in) {
  pop_to(0);
  if (reset_active_) {
    g_->rollback(reset_cp_);
    reset_active_ = false;
  }
  for (const EdgeId e : in) {
    KG_REQUIRE(g_->edge_alive(e), "seed edge is not alive");
    KG_REQUIRE(!in_edge_mark_[e], "seed edge listed twice");
    push_edge(e);
  }
  if (mode_ == EdgeMode::kSubtree && !in_.empty()) {
    KG_REQUIRE(vin_.size() == in_.size() + 1, "subtree seed must be a tree");
    reset_cp_ = g_->checkpoint();
    reset_active_ = true;
    chord_buf_.clear();
    for (const VertexId x : vin_) {
      for (const auto [f, y] : g_->incident(x)) {
        if (!in_edge_mark_[f] && vin_count_[y] > 0 && x < y) chord_buf_.push_back(f);
      }
    }
    for (const EdgeId f : chord_buf_) g_->delete_edge(f);
  }
}

void EdgeGraphletEnumerator::emit_current(SolutionSink emit) {
  emit(in_);
  ++emitted_;
}

TrimResult EdgeGraphletEnumerator::trim() {
  TrimResult r;
  r.in_before = in_.size();
  if (in_.size() >= k_) {
    r.edges = in_.size();
    r.vertices = vin_.size();
    r.feasible = in_.size() == k_;
    return r;
  }
  KG_REQUIRE(!in_.empty(), "trim: empty seed set");
  const std::uint32_t budget = k_ - static_cast<std::uint32_t>(in_.size());
  r.edges = ball_.run(vin_, budget - 1);
  builder_.from_edges(vin_.front(), ball_.edges(), local_);
  r.vertices = local_.num_vertices();
  r.feasible = mode_ == EdgeMode::kGraphlet ? r.edges >= k_ : r.vertices >= k_ + 1;
  if (!r.feasible) return r;

  // An edge is mandatory when the side of V(In) in H - e cannot host a
  // solution. Rooting the DFS at a vertex of V(In) makes that side the root
  // side of every bridge outside In.
  compute_lowpoints(local_, lowpoints_);
  mandatory_.clear();
  if (mode_ == EdgeMode::kGraphlet && r.edges == k_) {
    for (const auto& item : ball_.edges()) mandatory_.insert(item.edge);
  } else {
    for (std::uint32_t c = 1; c < local_.num_vertices(); ++c) {
      if (!lowpoints_.is_bridge_child(c)) continue;
      const EdgeId e = lowpoints_.parent_edge[c];
      if (in_edge_mark_[e]) continue;
      const bool mandatory =
          mode_ == EdgeMode::kGraphlet
              ? r.edges - (lowpoints_.subtree_degree[c] + 1) / 2 < k_
              : r.vertices - lowpoints_.subtree_size[c] < std::size_t{k_} + 1;
      if (mandatory) mandatory_.insert(e);
    }
  }

  // Absorb top-down from V(In); vin_ doubles as the BFS queue since newly
  // touched vertices are appended to it.
  for (std::size_t i = 0; i < vin_.size() && in_.size() < k_; ++i) {
    const std::uint32_t lx = builder_.local_of(vin_[i]);
    for (const auto& arc : local_.arcs(lx)) {
      if (!mandatory_.contains(arc.edge) || in_edge_mark_[arc.edge]) continue;
      push_edge(arc.edge);
      ++r.absorbed;
      if (in_.size() == k_) break;
    }
  }
  return r;
}

void EdgeGraphletEnumerator::undo_trim(const TrimResult& t) { pop_to(t.in_before); }

void EdgeGraphletEnumerator::collect_far(std::vector<EdgeId>& out) {
  out.clear();
  const std::uint32_t far_dist = k_ - static_cast<std::uint32_t>(in_.size()) - 1;
  ball_.run(vin_, far_dist);
  for (const auto& item : ball_.edges()) {
    if (item.dist == far_dist) out.push_back(item.edge);
  }
}

std::vector<EdgeId> EdgeGraphletEnumerator::far_edges() {
  KG_REQUIRE(!in_.empty() && in_.size() + 2 <= k_, "far_edges: requires 1 <= |In| <= k-2");
  std::vector<EdgeId> out;
  collect_far(out);
  return out;
}

std::uint64_t EdgeGraphletEnumerator::enum_far_solutions(std::span<const EdgeId> far,
                                                         SolutionSink emit) {
  if (far.empty()) return 0;
  KG_REQUIRE(!in_.empty() && in_.size() + 2 <= k_,
             "enum_far_solutions: requires 1 <= |In| <= k-2");
  const std::uint32_t far_dist = k_ - static_cast<std::uint32_t>(in_.size()) - 1;
  dag_.build(vin_, far_dist);
  const std::size_t base = in_.size();
  std::uint64_t count = 0;
  for (const EdgeId e : far) {
    const auto [a, b] = g_->endpoints(e);
    for (const VertexId end : {a, b}) {
      if (stopped()) return count;
      if (!dag_.contains(end) || dag_.layer(end) != far_dist) continue;
      dag_.enumerate_paths(end, [&](std::span<const EdgeId> path) {
        in_.insert(in_.end(), path.begin(), path.end());
        in_.push_back(e);
        bool keep = true;
        if (mode_ == EdgeMode::kSubtree) {
          scratch_vertices_.clear();
          std::size_t distinct = 0;
          for (const EdgeId f : in_) {
            const auto [x, y] = g_->endpoints(f);
            distinct += scratch_vertices_.insert(x);
            distinct += scratch_vertices_.insert(y);
          }
          keep = distinct == in_.size() + 1;
          if (!keep && audit_ != nullptr) ++audit_->cyclic_far_candidates;
        }
        if (keep) {
          emit_current(emit);
          ++count;
        }
        in_.resize(base);
        return !stopped();
      });
    }
  }
  return count;
}

std::size_t EdgeGraphletEnumerator::instance_edges() {
  const std::uint32_t budget = k_ - static_cast<std::uint32_t>(in_.size());
  return ball_.count(vin_, budget - 1);
}

bool EdgeGraphletEnumerator::is_heavy(EdgeId e) {
  KG_REQUIRE(!in_edge_mark_[e], "is_heavy: edge already in In");
  KG_REQUIRE(in_.size() < k_, "is_heavy: instance is complete");
  const std::size_t m = instance_edges();
  const Checkpoint cp = g_->checkpoint();
  g_->delete_edge(e);
  const std::size_t reachable = instance_edges();
  g_->rollback(cp);
  const std::size_t stranded = m - 1 - reachable;
  return 2 * stranded + 1 >= m;
}

void EdgeGraphletEnumerator::emit_with_each_gamma_edge(SolutionSink emit) {
  for (std::size_t i = 0, n = vin_.size(); i < n; ++i) {
    const VertexId x = vin_[i];
    for (const auto [f, y] : g_->incident(x)) {
      if (in_edge_mark_[f]) continue;
      if (vin_count_[y] > 0) {
        // Closes a cycle; counted once, from its smaller endpoint.
        if (mode_ == EdgeMode::kSubtree || y < x) continue;
      }
      in_.push_back(f);
      emit_current(emit);
      in_.pop_back();
      if (stopped()) return;
    }
  }
}

// First edge of Gamma(V(In)) outside In that is not heavy. At most one edge
// of a trimmed far-free instance is heavy, so at most two probes are made.
EdgeId EdgeGraphletEnumerator::pick_light_edge() {
  EdgeId first = kNoEdge;
  for (const VertexId x : vin_) {
    for (const auto [f, y] : g_->incident(x)) {
      if (in_edge_mark_[f] || f == first) continue;
      if (!is_heavy(f)) return f;
      if (first != kNoEdge) return first;  // two heavy edges: not expected
      first = f;
    }
  }
  return first;
}

void EdgeGraphletEnumerator::audit_heavy() {
  ++audit_->heavy_checks;
  std::size_t heavy = 0;
  std::size_t light = 0;
  for (std::size_t i = 0; i < vin_.size(); ++i) {
    const VertexId x = vin_[i];
    for (const auto [f, y] : g_->incident(x)) {
      if (in_edge_mark_[f]) continue;
      if (vin_count_[y] > 0 && y < x) continue;
      (is_heavy(f) ? heavy : light) += 1;
    }
  }
  if (heavy > 1) ++audit_->multiple_heavy_violations;
  if (light == 0) ++audit_->no_light_violations;
}

void EdgeGraphletEnumerator::recurse(SolutionSink emit) {
  const Checkpoint cp = g_->checkpoint();
  const std::size_t base = in_.size();
  // Instances reached by deleting far edges or the branching edge are
  // handled as further loop iterations, so recursion depth is bounded by k.
  while (!stopped()) {
    if (audit_ != nullptr) ++audit_->nodes;
    if (in_.size() >= k_) {
      emit_current(emit);
      break;
    }
    if (in_.size() + 1 == k_) {
      emit_with_each_gamma_edge(emit);
      break;
    }

    collect_far(far_buf_);
    if (!far_buf_.empty()) {
      const std::size_t before = audit_ != nullptr ? instance_edges() : 0;
      enum_far_solutions(far_buf_, emit);
      if (stopped()) break;
      for (const EdgeId e : far_buf_) g_->delete_edge(e);
      const std::size_t removed = far_buf_.size();
      const TrimResult t = trim();
      if (audit_ != nullptr) {
        ++audit_->far_trim_checks;
        if (t.edges + removed < before) ++audit_->far_trim_violations;
      }
      if (!t.feasible) break;
      continue;
    }

    const std::size_t m = instance_edges();
    if (audit_ != nullptr) audit_heavy();
    const EdgeId e = pick_light_edge();
    if (e == kNoEdge) break;

    {
      const Checkpoint branch = g_->checkpoint();
      const std::size_t before = in_.size();
      const auto [a, b] = g_->endpoints(e);
      const VertexId fresh = vin_count_[a] == 0 ? a : (vin_count_[b] == 0 ? b : kNoVertex);
      push_edge(e);
      std::size_t removed = 0;
      if (mode_ == EdgeMode::kSubtree && fresh != kNoVertex) {
        // Edges from the new vertex back into V(In) would close a cycle.
        chord_buf_.clear();
        for (const auto [f, y] : g_->incident(fresh)) {
          if (f != e && vin_count_[y] > 0) chord_buf_.push_back(f);
        }
        for (const EdgeId f : chord_buf_) g_->delete_edge(f);
        removed = chord_buf_.size();
      }
      const TrimResult t = trim();
      if (audit_ != nullptr) {
        ++audit_->include_trim_checks;
        if (t.edges + removed != m) ++audit_->include_trim_violations;
      }
      if (t.feasible) recurse(emit);
      pop_to(before);
      g_->rollback(branch);
    }
    if (stopped()) break;

    g_->delete_edge(e);
    const TrimResult t = trim();
    if (audit_ != nullptr) {
      ++audit_->exclude_trim_checks;
      if (2 * t.edges < m) ++audit_->exclude_trim_violations;
    }
    if (!t.feasible) break;
  }
  pop_to(base);
  g_->rollback(cp);
}

void EdgeGraphletEnumerator::enum_edge(SolutionSink emit) {
  KG_REQUIRE(mode_ == EdgeMode::kGraphlet, "enum_edge: enumerator is in subtree mode");
  KG_REQUIRE(!in_.empty(), "enum_edge: empty seed set");
  recurse(emit);
}

void EdgeGraphletEnumerator::enum_subtree(SolutionSink emit) {
  KG_REQUIRE(mode_ == EdgeMode::kSubtree, "enum_subtree: enumerator is in graphlet mode");
  KG_REQUIRE(!in_.empty(), "enum_subtree: empty seed set");
  recurse(emit);
}

std::uint64_t enumerate_edge_graphlets(DynGraph& g, std::uint32_t k, EdgeMode mode,
                                       SolutionSink emit, std::uint64_t limit,
                                       EdgeEnumAudit* audit) {
  KG_REQUIRE(k >= 1, "k must be at least 1");
  const Checkpoint cp = g.checkpoint();
  std::uint64_t emitted = 0;
  {
    EdgeGraphletEnumerator en(g, k, mode);
    en.set_limit(limit);
    en.set_audit(audit);
    for (const auto& comp : connected_components(g)) {
      const auto order = reversed_bfs_edges(g, comp.front());
      for (std::size_t i = 0; i + k <= order.size() && !en.stopped(); ++i) {
        const EdgeId seed = order[i];
        en.reset({&seed, 1});
        const TrimResult t = en.trim();
        if (t.feasible) {
          mode == EdgeMode::kGraphlet ? en.enum_edge(emit) : en.enum_subtree(emit);
        }
        en.undo_trim(t);
        en.reset({});
        g.delete_edge(seed);
      }
      if (en.stopped()) break;
    }
    emitted = en.emitted();
  }
  g.rollback(cp);
  return emitted;
}

}  // namespace kgraphlet
