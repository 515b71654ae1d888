#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kgraphlet/dyn_graph.hpp"

namespace kgraphlet {

// Malformed or inconsistent input. The message starts with "line N:" when
// the problem is tied to a line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An edge list with vertex labels relabelled densely in order of first
// appearance. Edge i is the i-th edge line of the input.
struct EdgeList {
  std::vector<std::uint64_t> labels;  // dense id -> original label
  std::vector<std::pair<VertexId, VertexId>> edges;

  VertexId num_vertices() const { return static_cast<VertexId>(labels.size()); }
  DynGraph to_graph() const { return DynGraph(num_vertices(), edges); }
};

// One edge per line: two whitespace separated non-negative integers. Blank
// lines and lines starting with '#' are skipped. Self-loops and duplicate
// edges are rejected.
EdgeList parse_edge_list(std::istream& in);
EdgeList read_edge_list(const std::string& path);

}  // namespace kgraphlet
