#include "kgraphlet/baseline.hpp"

#include <vector>

#include "kgraphlet/traversal.hpp"

namespace kgraphlet {

namespace {

class NaiveEdgeEnumerator {
 public:
  NaiveEdgeEnumerator(DynGraph& g, std::uint32_t k, EdgeMode mode, SolutionSink emit,
                      std::uint64_t limit)
      : g_(g),
        k_(k),
        mode_(mode),
        emit_(emit),
        limit_(limit),
        in_mark_(g.edge_capacity(), 0),
        vin_count_(g.vertex_capacity(), 0),
        seen_(g.vertex_capacity()) {}

  bool stopped() const { return limit_ != 0 && emitted_ >= limit_; }
  std::uint64_t emitted() const { return emitted_; }

  void run_seed(EdgeId seed) {
    push(seed);
    if (has_solution()) recurse();
    pop();
  }

 private:
  void push(EdgeId e) {
    in_.push_back(e);
    in_mark_[e] = 1;
    const auto [a, b] = g_.endpoints(e);
    ++vin_count_[a];
    ++vin_count_[b];
  }

  void pop() {
    const EdgeId e = in_.back();
    in_.pop_back();
    in_mark_[e] = 0;
    const auto [a, b] = g_.endpoints(e);
    --vin_count_[a];
    --vin_count_[b];
  }

  bool has_solution() {
    seen_.clear();
    queue_.clear();
    const VertexId root = g_.endpoints(in_.front()).first;
    seen_.insert(root);
    queue_.push_back(root);
    std::size_t degree_sum = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const VertexId x = queue_[head];
      degree_sum += g_.degree(x);
      for (const auto [e, y] : g_.incident(x)) {
        if (seen_.insert(y)) queue_.push_back(y);
      }
    }
    if (mode_ == EdgeMode::kGraphlet) return degree_sum / 2 >= k_;
    return queue_.size() >= std::size_t{k_} + 1;
  }

  EdgeId first_gamma_edge() const {
    for (const EdgeId f : in_) {
      const auto [a, b] = g_.endpoints(f);
      for (const VertexId x : {a, b}) {
        for (const auto [e, y] : g_.incident(x)) {
          if (!in_mark_[e]) return e;
        }
      }
    }
    return kNoEdge;
  }

  void recurse() {
    const Checkpoint cp = g_.checkpoint();
    while (!stopped()) {
      if (in_.size() == k_) {
        emit_(in_);
        ++emitted_;
        break;
      }
      const EdgeId e = first_gamma_edge();
      if (e == kNoEdge) break;
      const auto [a, b] = g_.endpoints(e);
      const bool closes_cycle = vin_count_[a] > 0 && vin_count_[b] > 0;
      if (!(mode_ == EdgeMode::kSubtree && closes_cycle)) {
        push(e);
        if (has_solution()) recurse();
        pop();
        if (stopped()) break;
      }
      g_.delete_edge(e);
      if (!has_solution()) break;
    }
    g_.rollback(cp);
  }

  DynGraph& g_;
  std::uint32_t k_;
  EdgeMode mode_;
  SolutionSink emit_;
  std::uint64_t limit_;
  std::uint64_t emitted_ = 0;
  std::vector<EdgeId> in_;
  std::vector<std::uint8_t> in_mark_;
  std::vector<std::uint32_t> vin_count_;
  StampSet seen_;
  std::vector<VertexId> queue_;
};

}  // namespace

std::uint64_t naive_edge_graphlets(DynGraph& g, std::uint32_t k, EdgeMode mode,
                                   SolutionSink emit, std::uint64_t limit) {
  KG_REQUIRE(k >= 1, "k must be at least 1");
  const Checkpoint cp = g.checkpoint();
  NaiveEdgeEnumerator en(g, k, mode, emit, limit);
  for (const auto& comp : connected_components(g)) {
    const auto order = reversed_bfs_edges(g, comp.front());
    for (std::size_t i = 0; i + k <= order.size() && !en.stopped(); ++i) {
      en.run_seed(order[i]);
      g.delete_edge(order[i]);
    }
    if (en.stopped()) break;
  }
  g.rollback(cp);
  return en.emitted();
}

}  // namespace kgraphlet
