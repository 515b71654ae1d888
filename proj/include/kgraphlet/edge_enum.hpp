#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kgraphlet/decomposition.hpp"
#include "kgraphlet/dyn_graph.hpp"
#include "kgraphlet/shortest_paths.hpp"
#include "kgraphlet/traversal.hpp"
#include "kgraphlet/types.hpp"

namespace kgraphlet {

enum class EdgeMode {
  kGraphlet,  // connected edge sets of size k
  kSubtree,   // acyclic connected edge sets of size k
};

// Outcome of one trimming step. The instance's edge set H is implicit: the
// alive edges within distance k - |In| - 1 of V(In) after absorption started.
// Unnecessary edges are never deleted, they simply fall outside that ball
// and nothing below this node can reach them again.
struct TrimResult {
  std::size_t in_before = 0;  // |In| on entry
  std::size_t absorbed = 0;   // mandatory edges appended to In
  std::size_t edges = 0;      // |E(H)|
  std::size_t vertices = 0;   // |V(H)|
  bool feasible = false;      // S(H, In, k) is nonempty
};

// Counters filled when an audit is attached. Each check corresponds to a
// structural property the amortized analysis depends on; violations are
// counted, never thrown.
struct EdgeEnumAudit {
  std::uint64_t nodes = 0;
  // Trimming after deleting the far edges removes nothing else.
  std::uint64_t far_trim_checks = 0;
  std::uint64_t far_trim_violations = 0;
  // Trimming after adding an edge of Gamma(V(In)) removes nothing.
  std::uint64_t include_trim_checks = 0;
  std::uint64_t include_trim_violations = 0;
  // Trimming after deleting a non-heavy edge keeps at least half the edges.
  std::uint64_t exclude_trim_checks = 0;
  std::uint64_t exclude_trim_violations = 0;
  // Gamma(V(In)) has at most one heavy edge and at least one light one.
  std::uint64_t heavy_checks = 0;
  std::uint64_t multiple_heavy_violations = 0;
  std::uint64_t no_light_violations = 0;
  // Far solutions dropped by the acyclicity filter in subtree mode.
  std::uint64_t cyclic_far_candidates = 0;
};

// Enumerates edge k-graphlets (or k-subtrees) containing a connected seed
// edge set In. Binary partition on an edge of Gamma(V(In)), with far edges
// resolved by shortest-path enumeration and the branching edge chosen
// non-heavy. All graph edits are undone before each public call returns.
class EdgeGraphletEnumerator {
 public:
  EdgeGraphletEnumerator(DynGraph& g, std::uint32_t k, EdgeMode mode);
  ~EdgeGraphletEnumerator();
  EdgeGraphletEnumerator(const EdgeGraphletEnumerator&) = delete;
  EdgeGraphletEnumerator& operator=(const EdgeGraphletEnumerator&) = delete;

  // Replaces the seed set; In must be connected (and acyclic in subtree
  // mode). In subtree mode, alive edges joining two vertices of V(In) that
  // are not in In are deleted until the next reset.
  void reset(std::span<const EdgeId> in);
  std::span<const EdgeId> in_edges() const { return in_; }
  std::span<const VertexId> in_vertices() const { return vin_; }
  std::uint32_t k() const { return k_; }
  EdgeMode mode() const { return mode_; }

  void set_limit(std::uint64_t limit) { limit_ = limit; }
  std::uint64_t emitted() const { return emitted_; }
  bool stopped() const { return limit_ != 0 && emitted_ >= limit_; }
  void set_audit(EdgeEnumAudit* audit) { audit_ = audit; }

  // Distance-bounded BFS from V(In) followed by bridge analysis of the
  // reached ball; absorbs mandatory edges adjacent to V(In), iteratively.
  // O(|E(H)|).
  TrimResult trim();
  // Removes the edges absorbed by `t` from In.
  void undo_trim(const TrimResult& t);

  // Edges at distance exactly k - |In| - 1 from V(In). Requires |In| <= k-2.
  std::vector<EdgeId> far_edges();
  // Emits In + shortest path + e for every far edge e. Returns the count.
  std::uint64_t enum_far_solutions(std::span<const EdgeId> far, SolutionSink emit);
  // Deleting e (an edge of Gamma(V(In))) strands at least half the edges of
  // the instance minus e outside the distance budget.
  bool is_heavy(EdgeId e);

  // Both require a trimmed instance with at least one solution.
  void enum_edge(SolutionSink emit);
  void enum_subtree(SolutionSink emit);

 private:
  void push_edge(EdgeId e);
  void pop_to(std::size_t size);
  void emit_current(SolutionSink emit);
  void emit_with_each_gamma_edge(SolutionSink emit);
  void collect_far(std::vector<EdgeId>& out);
  std::size_t instance_edges();
  EdgeId pick_light_edge();
  void audit_heavy();
  void recurse(SolutionSink emit);

  DynGraph* g_;
  std::uint32_t k_;
  EdgeMode mode_;

  std::vector<EdgeId> in_;
  std::vector<std::uint8_t> in_edge_mark_;
  std::vector<VertexId> vin_;
  std::vector<std::uint32_t> vin_count_;
  Checkpoint reset_cp_;
  bool reset_active_ = false;

  EdgeBall ball_;
  LocalGraphBuilder builder_;
  LocalGraph local_;
  LowpointTree lowpoints_;
  StampSet mandatory_;
  LayeredDag dag_;
  StampSet scratch_vertices_;
  std::vector<EdgeId> far_buf_;
  std::vector<EdgeId> chord_buf_;

  std::uint64_t limit_ = 0;
  std::uint64_t emitted_ = 0;
  EdgeEnumAudit* audit_ = nullptr;
};

// Every edge k-graphlet (or k-subtree) of g exactly once. Seeds follow a
// reversed BFS order of the edges of each component; each seed is trimmed,
// enumerated, then deleted. Returns the number of solutions emitted.
std::uint64_t enumerate_edge_graphlets(DynGraph& g, std::uint32_t k, EdgeMode mode,
                                       SolutionSink emit, std::uint64_t limit = 0,
                                       EdgeEnumAudit* audit = nullptr);

}  // namespace kgraphlet
