#pragma once

#include <random>
#include <utility>
#include <vector>

#include "kgraphlet/bench.hpp"
#include "kgraphlet/dyn_graph.hpp"
#include "kgraphlet/generators.hpp"
#include "kgraphlet/oracle.hpp"

namespace kgtest {

using namespace kgraphlet;
using Edges = std::vector<std::pair<VertexId, VertexId>>;

inline DynGraph make_graph(VertexId n, const Edges& edges) { return DynGraph(n, edges); }

// K4 without the edge 2-3.
inline DynGraph fig1() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// Two triangles joined by a path of three edges.
inline Edges barbell_edges() {
  return {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}};
}

inline Edges petersen_edges() {
  Edges e;
  for (VertexId i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
  for (VertexId i = 0; i < 5; ++i) e.emplace_back(i, i + 5);
  for (VertexId i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 2) % 5);
  return e;
}

inline SolutionSet collect(DynGraph& g, std::uint32_t k, Mode mode) {
  SolutionSet s;
  enumerate(g, k, mode, [&](std::span<const std::uint32_t> ids) { s.insert(ids); });
  return s;
}

inline SolutionSet brute(const DynGraph& g, std::uint32_t k, Mode mode) {
  switch (mode) {
    case Mode::kVertex:
      return brute_vertex(g, k);
    case Mode::kEdge:
      return brute_edge(g, k);
    case Mode::kSubtree:
      return brute_subtree(g, k);
  }
  return {};
}

// Random simple graph with n vertices and up to m edges.
inline DynGraph random_graph(std::mt19937_64& rng, VertexId n, std::size_t m) {
  const std::size_t cap = std::size_t{n} * (n - 1) / 2;
  return gnm_graph(n, std::min(m, cap), rng()).to_graph();
}

}  // namespace kgtest
