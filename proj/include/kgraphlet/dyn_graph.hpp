#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

#include "kgraphlet/types.hpp"

namespace kgraphlet {

// Marker into the undo log of a DynGraph. Obtained from checkpoint() and
// consumed by rollback().
struct Checkpoint {
  std::size_t depth = 0;
  std::uint64_t last_serial = 0;
};

// Canonical serialization used for state equality: sorted alive vertex ids
// and sorted (min endpoint, max endpoint, edge id) triples of alive edges.
struct CanonicalForm {
  struct EdgeTriple {
    VertexId lo;
    VertexId hi;
    EdgeId id;
    auto operator<=>(const EdgeTriple&) const = default;
  };
  std::vector<VertexId> vertices;
  std::vector<EdgeTriple> edges;
  bool operator==(const CanonicalForm&) const = default;
};

struct IncidentEdge {
  EdgeId edge;
  VertexId neighbor;
};

// Undirected simple graph that supports O(1) edge deletion, O(deg) vertex
// deletion and LIFO rollback of both.
//
// Every vertex owns a circular doubly linked list of half-edges with a
// sentinel node. Half-edge 2e lives in the list of the first endpoint of e,
// 2e+1 in the list of the second. Unlinking leaves the node's own links
// intact, so undoing deletions in reverse order relinks every half-edge at
// its original position and iteration order is restored exactly.
class DynGraph {
 public:
  class IncidentRange;

  DynGraph() = default;
  // Vertices are 0..num_vertices-1; edge i is edges[i]. Throws
  // std::invalid_argument on self-loops, duplicate edges or out of range ids.
  DynGraph(VertexId num_vertices,
           std::span<const std::pair<VertexId, VertexId>> edges);

  VertexId vertex_capacity() const { return static_cast<VertexId>(vertex_alive_.size()); }
  EdgeId edge_capacity() const { return static_cast<EdgeId>(endpoints_.size()); }
  std::size_t num_vertices() const { return n_live_; }
  std::size_t num_edges() const { return m_live_; }

  bool vertex_alive(VertexId v) const { return vertex_alive_[v] != 0; }
  bool edge_alive(EdgeId e) const { return edge_alive_[e] != 0; }
  std::uint32_t degree(VertexId v) const { return degree_[v]; }
  std::uint32_t max_degree() const;

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return endpoints_[e]; }
  VertexId other_endpoint(EdgeId e, VertexId v) const {
    const auto [a, b] = endpoints_[e];
    return a == v ? b : a;
  }

  // Alive incident edges of v, in list order.
  IncidentRange incident(VertexId v) const;

  void delete_edge(EdgeId e);
  void delete_vertex(VertexId v);

  Checkpoint checkpoint() const;
  void rollback(Checkpoint cp);
  std::size_t undo_depth() const { return log_.size(); }

  CanonicalForm canonical() const;

 private:
  enum class OpKind : std::uint8_t { kEdge, kVertex };
  struct LogEntry {
    OpKind kind;
    std::uint32_t id;
    std::uint64_t serial;
  };

  std::uint32_t sentinel(VertexId v) const {
    return static_cast<std::uint32_t>(2 * endpoints_.size() + v);
  }
  void unlink(std::uint32_t h) {
    next_[prev_[h]] = next_[h];
    prev_[next_[h]] = prev_[h];
  }
  void relink(std::uint32_t h) {
    next_[prev_[h]] = h;
    prev_[next_[h]] = h;
  }
  void push_log(OpKind kind, std::uint32_t id);

  std::vector<std::pair<VertexId, VertexId>> endpoints_;
  std::vector<std::uint8_t> edge_alive_;
  std::vector<std::uint8_t> vertex_alive_;
  std::vector<std::uint32_t> degree_;
  // Half-edges 0..2m-1 followed by one sentinel per vertex.
  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> prev_;
  // owner_[h]: vertex whose list holds half-edge h.
  std::vector<VertexId> owner_;
  std::vector<LogEntry> log_;
  std::uint64_t serial_ = 0;
  std::size_t n_live_ = 0;
  std::size_t m_live_ = 0;
};

class DynGraph::IncidentRange {
 public:
  class iterator {
   public:
    using value_type = IncidentEdge;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    iterator(const DynGraph* g, std::uint32_t h) : g_(g), h_(h) {}
    IncidentEdge operator*() const {
      return {h_ >> 1, g_->owner_[h_ ^ 1u]};
    }
    iterator& operator++() {
      h_ = g_->next_[h_];
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& o) const { return h_ == o.h_; }

   private:
    const DynGraph* g_ = nullptr;
    std::uint32_t h_ = 0;
  };

  IncidentRange(const DynGraph* g, VertexId v) : g_(g), v_(v) {}
  iterator begin() const { return {g_, g_->next_[g_->sentinel(v_)]}; }
  iterator end() const { return {g_, g_->sentinel(v_)}; }

 private:
  const DynGraph* g_;
  VertexId v_;
};

inline DynGraph::IncidentRange DynGraph::incident(VertexId v) const {
  return IncidentRange(this, v);
}

}  // namespace kgraphlet
