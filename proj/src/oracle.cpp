#include "kgraphlet/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace kgraphlet {

std::size_t IdListHash::operator()(const std::vector<std::uint32_t>& ids) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (const std::uint32_t x : ids) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::vector<std::uint32_t> canonical_ids(std::span<const std::uint32_t> ids) {
  std::vector<std::uint32_t> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool SolutionSet::insert(std::span<const std::uint32_t> ids) {
  const bool fresh = set_.insert(canonical_ids(ids)).second;
  if (!fresh) ++repeats_;
  return fresh;
}

bool SolutionSet::contains(std::span<const std::uint32_t> ids) const {
  return set_.contains(canonical_ids(ids));
}

std::vector<std::vector<std::uint32_t>> SolutionSet::sorted() const {
  std::vector<std::vector<std::uint32_t>> out(set_.begin(), set_.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

template <typename Visit>
void for_each_combination(std::span<const std::uint32_t> items, std::uint32_t k, Visit visit) {
  const std::size_t n = items.size();
  if (k == 0 || k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::uint32_t> pick(k);
  while (true) {
    for (std::uint32_t i = 0; i < k; ++i) pick[i] = items[idx[i]];
    visit(std::span<const std::uint32_t>(pick));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::uint32_t> alive_vertices(const DynGraph& g) {
  std::vector<std::uint32_t> out;
  for (VertexId v = 0; v < g.vertex_capacity(); ++v) {
    if (g.vertex_alive(v)) out.push_back(v);
  }
  return out;
}

std::vector<std::uint32_t> alive_edges(const DynGraph& g) {
  std::vector<std::uint32_t> out;
  for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
    if (g.edge_alive(e)) out.push_back(e);
  }
  return out;
}

}  // namespace

bool induces_connected(const DynGraph& g, std::span<const VertexId> vertices) {
  if (vertices.empty()) return false;
  std::vector<std::uint8_t> member(g.vertex_capacity(), 0);
  for (const VertexId v : vertices) member[v] = 1;
  DisjointSets ds(g.vertex_capacity());
  std::size_t parts = vertices.size();
  for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
    if (!g.edge_alive(e)) continue;
    const auto [a, b] = g.endpoints(e);
    if (member[a] && member[b] && ds.unite(a, b)) --parts;
  }
  return parts == 1;
}

bool edges_connected(const DynGraph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) return false;
  DisjointSets ds(g.vertex_capacity());
  std::vector<VertexId> touched;
  for (const EdgeId e : edges) {
    const auto [a, b] = g.endpoints(e);
    touched.push_back(a);
    touched.push_back(b);
    ds.unite(a, b);
  }
  const std::uint32_t root = ds.find(touched.front());
  return std::all_of(touched.begin(), touched.end(),
                     [&](VertexId v) { return ds.find(v) == root; });
}

bool edges_acyclic(const DynGraph& g, std::span<const EdgeId> edges) {
  DisjointSets ds(g.vertex_capacity());
  for (const EdgeId e : edges) {
    const auto [a, b] = g.endpoints(e);
    if (!ds.unite(a, b)) return false;
  }
  return true;
}

SolutionSet brute_vertex(const DynGraph& g, std::uint32_t k) {
  SolutionSet out;
  for_each_combination(alive_vertices(g), k, [&](std::span<const std::uint32_t> pick) {
    if (induces_connected(g, pick)) out.insert(pick);
  });
  return out;
}

SolutionSet brute_edge(const DynGraph& g, std::uint32_t k) {
  SolutionSet out;
  for_each_combination(alive_edges(g), k, [&](std::span<const std::uint32_t> pick) {
    if (edges_connected(g, pick)) out.insert(pick);
  });
  return out;
}

SolutionSet brute_subtree(const DynGraph& g, std::uint32_t k) {
  SolutionSet out;
  for_each_combination(alive_edges(g), k, [&](std::span<const std::uint32_t> pick) {
    if (edges_connected(g, pick) && edges_acyclic(g, pick)) out.insert(pick);
  });
  return out;
}

LineGraph line_graph(const DynGraph& g) {
  LineGraph lg;
  lg.edge_to_vertex.assign(g.edge_capacity(), kNoVertex);
  for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
    if (!g.edge_alive(e)) continue;
    lg.edge_to_vertex[e] = static_cast<VertexId>(lg.vertex_to_edge.size());
    lg.vertex_to_edge.push_back(e);
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId v = 0; v < g.vertex_capacity(); ++v) {
    if (!g.vertex_alive(v)) continue;
    std::vector<VertexId> around;
    for (const auto [e, u] : g.incident(v)) around.push_back(lg.edge_to_vertex[e]);
    for (std::size_t i = 0; i < around.size(); ++i) {
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        pairs.emplace_back(around[i], around[j]);
      }
    }
  }
  // Two distinct simple-graph edges share at most one endpoint, so no pair
  // is produced twice.
  lg.graph = DynGraph(static_cast<VertexId>(lg.vertex_to_edge.size()), pairs);
  return lg;
}

}  // namespace kgraphlet
