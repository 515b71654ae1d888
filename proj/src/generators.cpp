#include "kgraphlet/generators.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace kgraphlet {

namespace {

EdgeList with_vertices(std::uint32_t n) {
  EdgeList g;
  g.labels.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) g.labels[i] = i;
  return g;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    parts.push_back(s.substr(start, at - start));
    if (at == std::string::npos) return parts;
    start = at + 1;
  }
}

std::uint64_t parse_param(const std::string& spec, const std::string& tok) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("bad parameter '" + tok + "' in generator spec '" + spec + "'");
  }
  return v;
}

std::uint32_t as_u32(const std::string& spec, std::uint64_t v) {
  if (v >= kNoVertex) throw std::invalid_argument("parameter too large in '" + spec + "'");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Largest multiple of bound that fits; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

EdgeList path_graph(std::uint32_t n) {
  EdgeList g = with_vertices(n);
  for (std::uint32_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

EdgeList cycle_graph(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  EdgeList g = path_graph(n);
  g.edges.emplace_back(n - 1, 0);
  return g;
}

EdgeList star_graph(std::uint32_t leaves) {
  EdgeList g = with_vertices(leaves + 1);
  for (std::uint32_t i = 1; i <= leaves; ++i) g.edges.emplace_back(0, i);
  return g;
}

EdgeList hub_graph(std::uint32_t rim) {
  if (rim < 3) throw std::invalid_argument("hub needs at least 3 rim vertices");
  EdgeList g = star_graph(rim);
  for (std::uint32_t i = 1; i < rim; ++i) g.edges.emplace_back(i, i + 1);
  g.edges.emplace_back(rim, 1);
  return g;
}

EdgeList grid_graph(std::uint32_t w, std::uint32_t h) {
  EdgeList g = with_vertices(w * h);
  for (std::uint32_t y = 0; y < h; ++y) {
    for (std::uint32_t x = 0; x < w; ++x) {
      const std::uint32_t v = y * w + x;
      if (x + 1 < w) g.edges.emplace_back(v, v + 1);
      if (y + 1 < h) g.edges.emplace_back(v, v + w);
    }
  }
  return g;
}

EdgeList complete_graph(std::uint32_t n) {
  EdgeList g = with_vertices(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

EdgeList gnm_graph(std::uint32_t n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t max_edges = std::uint64_t{n} * (n > 0 ? n - 1 : 0) / 2;
  if (m > max_edges) throw std::invalid_argument("gnm: too many edges for n");
  EdgeList g = with_vertices(n);
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> used;
  used.reserve(m * 2);
  while (g.edges.size() < m) {
    const auto a = static_cast<VertexId>(uniform_below(rng, n));
    const auto b = static_cast<VertexId>(uniform_below(rng, n));
    if (a == b) continue;
    const std::uint64_t key = (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b);
    if (used.insert(key).second) g.edges.emplace_back(a, b);
  }
  return g;
}

GeneratedGraph generate(const std::string& spec, std::uint64_t seed) {
  const auto parts = split(spec, ':');
  const std::string& family = parts.front();
  auto expect = [&](std::size_t params) {
    if (parts.size() != params + 1) {
      throw std::invalid_argument("generator '" + family + "' takes " +
                                  std::to_string(params) + " parameter(s): '" + spec + "'");
    }
  };
  auto param = [&](std::size_t i) { return as_u32(spec, parse_param(spec, parts[i])); };

  GeneratedGraph out{family, {}};
  if (family == "path") {
    expect(1);
    out.graph = path_graph(param(1));
  } else if (family == "cycle") {
    expect(1);
    out.graph = cycle_graph(param(1));
  } else if (family == "star") {
    expect(1);
    out.graph = star_graph(param(1));
  } else if (family == "hub") {
    expect(1);
    out.graph = hub_graph(param(1));
  } else if (family == "gnm") {
    expect(2);
    out.graph = gnm_graph(param(1), parse_param(spec, parts[2]), seed);
  } else if (family == "grid") {
    expect(2);
    out.graph = grid_graph(param(1), param(2));
  } else if (family == "complete") {
    expect(1);
    out.graph = complete_graph(param(1));
  } else {
    throw std::invalid_argument("unknown generator family '" + family + "'");
  }
  return out;
}

}  // namespace kgraphlet
