#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "kgraphlet/decomposition.hpp"
#include "kgraphlet/traversal.hpp"

using namespace kgtest;

namespace {

std::size_t component_size(const DynGraph& g, VertexId v) {
  for (const auto& c : connected_components(g)) {
    if (std::find(c.begin(), c.end(), v) != c.end()) return c.size();
  }
  return 0;
}

}  // namespace

TEST_CASE("bridge_decomposition on a path") {
  DynGraph g = path_graph(5).to_graph();
  const BridgeTree t = bridge_decomposition(g, 0);
  REQUIRE(t.bridges.size() == 4);
  std::vector<std::uint64_t> loss_by_edge(4);
  for (const auto& b : t.bridges) loss_by_edge[b.edge] = b.edge_loss;
  CHECK(loss_by_edge == std::vector<std::uint64_t>{4, 3, 2, 1});
  CHECK(t.components.size() == 5);
  CHECK(t.component_edges == 4);
}

TEST_CASE("bridge_decomposition on cycles") {
  DynGraph tri = cycle_graph(3).to_graph();
  const BridgeTree t = bridge_decomposition(tri, 0);
  CHECK(t.bridges.empty());
  CHECK(t.components.size() == 1);

  DynGraph two = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  const BridgeTree u = bridge_decomposition(two, 0);
  REQUIRE(u.bridges.size() == 1);
  CHECK(u.bridges[0].edge == 3);
  CHECK(u.bridges[0].edge_loss == 4);
  CHECK(u.bridges[0].vertex_loss == 3);
  CHECK(u.bridges[0].parent_vertex == 2);
  CHECK(u.bridges[0].child_vertex == 3);
}

TEST_CASE("bridges agree with a connectivity recheck") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    DynGraph g = random_graph(rng, 12, 14);
    const BridgeTree tree = bridge_decomposition(g, 0);
    std::vector<std::uint8_t> is_bridge(g.edge_capacity(), 0);
    for (const auto& b : tree.bridges) is_bridge[b.edge] = 1;
    const auto comp = connected_components(g);
    const auto& root_comp = *std::find_if(comp.begin(), comp.end(), [](const auto& c) {
      return std::find(c.begin(), c.end(), VertexId{0}) != c.end();
    });
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
      const auto [x, y] = g.endpoints(e);
      if (std::find(root_comp.begin(), root_comp.end(), x) == root_comp.end()) continue;
      const Checkpoint cp = g.checkpoint();
      g.delete_edge(e);
      const bool splits = component_size(g, x) < root_comp.size();
      g.rollback(cp);
      CHECK(static_cast<bool>(is_bridge[e]) == splits);
    }
  }
}

TEST_CASE("articulation points") {
  DynGraph path = path_graph(3).to_graph();
  CHECK(articulation_points(path, 0).articulation_points == std::vector<VertexId>{1});
  DynGraph cyc = cycle_graph(6).to_graph();
  CHECK(articulation_points(cyc, 0).articulation_points.empty());
  DynGraph g = fig1();
  const BlockCutTree t = articulation_points(g, 0);
  CHECK(t.articulation_points.empty());
  CHECK(t.blocks.size() == 1);
}

TEST_CASE("articulation points agree with vertex removal") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    DynGraph g = random_graph(rng, 10, 13);
    const auto comp = connected_components(g).front();
    const auto cut = articulation_points(g, comp.front()).articulation_points;
    for (const VertexId v : comp) {
      const Checkpoint cp = g.checkpoint();
      g.delete_vertex(v);
      std::size_t pieces = 0;
      for (const auto& c : connected_components(g)) {
        if (std::any_of(c.begin(), c.end(), [&](VertexId x) {
              return std::find(comp.begin(), comp.end(), x) != comp.end();
            })) {
          ++pieces;
        }
      }
      g.rollback(cp);
      CHECK(std::binary_search(cut.begin(), cut.end(), v) == (pieces > 1));
    }
  }
}
