#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "kgraphlet/graph_io.hpp"

namespace kgraphlet {

// Synthetic families. Labels are 0..n-1.
//   path:n        n vertices, n-1 edges
//   cycle:n       n >= 3
//   star:d        one centre, d leaves
//   hub:d         wheel: centre joined to d rim vertices forming a cycle (d >= 3)
//   gnm:n:m       m distinct edges drawn uniformly, seeded
//   grid:w:h      w x h lattice
//   complete:n    K_n
struct GeneratedGraph {
  std::string family;
  EdgeList graph;
};

// Throws std::invalid_argument on an unknown family or bad parameters.
GeneratedGraph generate(const std::string& spec, std::uint64_t seed);

EdgeList path_graph(std::uint32_t n);
EdgeList cycle_graph(std::uint32_t n);
EdgeList star_graph(std::uint32_t leaves);
EdgeList hub_graph(std::uint32_t rim);
EdgeList grid_graph(std::uint32_t w, std::uint32_t h);
EdgeList complete_graph(std::uint32_t n);
// Rejection sampling of vertex pairs with mt19937_64. Uniform draws in
// [0, n) reject the top partial block and reduce modulo n, so the stream
// does not depend on the standard library's distributions.
EdgeList gnm_graph(std::uint32_t n, std::uint64_t m, std::uint64_t seed);

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace kgraphlet
