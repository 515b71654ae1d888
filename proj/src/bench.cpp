#include "kgraphlet/bench.hpp"

#include <chrono>

#include "kgraphlet/baseline.hpp"
#include "kgraphlet/vertex_enum.hpp"

namespace kgraphlet {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::kVertex:
      return "vertex";
    case Mode::kEdge:
      return "edge";
    case Mode::kSubtree:
      return "subtree";
  }
  return "?";
}

bool parse_mode(const std::string& text, Mode& out) {
  if (text == "vertex") {
    out = Mode::kVertex;
  } else if (text == "edge") {
    out = Mode::kEdge;
  } else if (text == "subtree") {
    out = Mode::kSubtree;
  } else {
    return false;
  }
  return true;
}

std::uint64_t enumerate(DynGraph& g, std::uint32_t k, Mode mode, SolutionSink emit,
                        std::uint64_t limit) {
  switch (mode) {
    case Mode::kVertex:
      return enumerate_vertex_graphlets(g, k, emit, limit);
    case Mode::kEdge:
      return enumerate_edge_graphlets(g, k, EdgeMode::kGraphlet, emit, limit);
    case Mode::kSubtree:
      return enumerate_edge_graphlets(g, k, EdgeMode::kSubtree, emit, limit);
  }
  return 0;
}

void write_csv_row(std::ostream& out, const BenchRecord& r) {
  out << r.family << ',' << r.n << ',' << r.m << ',' << r.max_deg << ',' << r.k << ','
      << mode_name(r.mode) << ',' << r.solutions << ',' << r.prep_ns << ',' << r.total_ns
      << ',' << r.ns_per_solution << '\n';
}

BenchRecord run_bench(const std::string& family, const EdgeList& graph, std::uint32_t k,
                      Mode mode, std::uint64_t limit, Algorithm algorithm) {
  using Clock = std::chrono::steady_clock;
  KG_REQUIRE(algorithm == Algorithm::kFast || mode != Mode::kVertex,
             "naive baseline covers edge and subtree modes only");
  BenchRecord r;
  r.family = family;
  r.k = k;
  r.mode = mode;

  const auto start = Clock::now();
  DynGraph g = graph.to_graph();
  const auto prepared = Clock::now();

  std::uint64_t count = 0;
  auto counter = [&count](std::span<const std::uint32_t>) { ++count; };
  if (algorithm == Algorithm::kFast) {
    enumerate(g, k, mode, counter, limit);
  } else {
    naive_edge_graphlets(g, k, mode == Mode::kEdge ? EdgeMode::kGraphlet : EdgeMode::kSubtree,
                         counter, limit);
  }
  const auto done = Clock::now();

  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.max_deg = g.max_degree();
  r.solutions = count;
  r.prep_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(prepared - start).count());
  r.total_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(done - start).count());
  if (count > 0) {
    r.ns_per_solution = static_cast<double>(r.total_ns - r.prep_ns) / static_cast<double>(count);
  }
  return r;
}

}  // namespace kgraphlet
