#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "kgraphlet/edge_enum.hpp"
#include "kgraphlet/graph_io.hpp"

namespace kgraphlet {

enum class Mode { kVertex, kEdge, kSubtree };

const char* mode_name(Mode mode);
// Accepts "vertex", "edge" and "subtree".
bool parse_mode(const std::string& text, Mode& out);

enum class Algorithm { kFast, kNaive };

struct BenchRecord {
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t max_deg = 0;
  std::uint32_t k = 0;
  Mode mode = Mode::kEdge;
  std::uint64_t solutions = 0;
  std::uint64_t prep_ns = 0;   // building the dynamic graph
  std::uint64_t total_ns = 0;  // prep plus enumeration
  double ns_per_solution = 0;  // (total - prep) / solutions, 0 when none
};

inline constexpr const char* kBenchCsvHeader =
    "family,n,m,max_deg,k,mode,solutions,prep_ns,total_ns,ns_per_solution";

void write_csv_row(std::ostream& out, const BenchRecord& r);

// Enumerates with a counting sink. `limit` caps the solutions (0 = all).
// The naive algorithm exists for edge and subtree modes only.
BenchRecord run_bench(const std::string& family, const EdgeList& graph, std::uint32_t k,
                      Mode mode, std::uint64_t limit = 0,
                      Algorithm algorithm = Algorithm::kFast);

// Dispatches to the enumerator for `mode`. Returns the number emitted.
std::uint64_t enumerate(DynGraph& g, std::uint32_t k, Mode mode, SolutionSink emit,
                        std::uint64_t limit = 0);

}  // namespace kgraphlet
