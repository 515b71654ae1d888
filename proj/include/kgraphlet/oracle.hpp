#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "kgraphlet/dyn_graph.hpp"

namespace kgraphlet {

struct IdListHash {
  std::size_t operator()(const std::vector<std::uint32_t>& ids) const noexcept;
};

// Solutions in canonical form (sorted id lists). Inserting a duplicate is
// reported, not silently merged, so callers can count repeats.
class SolutionSet {
 public:
  // Returns false when the canonical form was already present.
  bool insert(std::span<const std::uint32_t> ids);
  bool contains(std::span<const std::uint32_t> ids) const;
  std::size_t size() const { return set_.size(); }
  std::uint64_t repeats() const { return repeats_; }
  // Sorted lexicographically, for stable diffs and printing.
  std::vector<std::vector<std::uint32_t>> sorted() const;

  bool operator==(const SolutionSet& o) const { return set_ == o.set_; }

 private:
  std::unordered_set<std::vector<std::uint32_t>, IdListHash> set_;
  std::uint64_t repeats_ = 0;
};

std::vector<std::uint32_t> canonical_ids(std::span<const std::uint32_t> ids);

// Pure subset scans over the alive part of g; no pruning. Exponential.
SolutionSet brute_vertex(const DynGraph& g, std::uint32_t k);
SolutionSet brute_edge(const DynGraph& g, std::uint32_t k);
SolutionSet brute_subtree(const DynGraph& g, std::uint32_t k);

// Independent membership checks on a single candidate.
bool induces_connected(const DynGraph& g, std::span<const VertexId> vertices);
bool edges_connected(const DynGraph& g, std::span<const EdgeId> edges);
bool edges_acyclic(const DynGraph& g, std::span<const EdgeId> edges);

struct LineGraph {
  DynGraph graph;
  std::vector<EdgeId> vertex_to_edge;    // line vertex -> edge of g
  std::vector<VertexId> edge_to_vertex;  // edge of g -> line vertex (kNoVertex if dead)
};

// One vertex per alive edge of g, adjacent when the edges share an endpoint.
LineGraph line_graph(const DynGraph& g);

}  // namespace kgraphlet
