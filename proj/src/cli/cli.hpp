#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kgraphlet/bench.hpp"
#include "kgraphlet/dyn_graph.hpp"
#include "kgraphlet/graph_io.hpp"

namespace kgraphlet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Largest edge count `verify` accepts.
inline constexpr std::size_t kVerifyMaxEdges = 24;
// Queue length used by --queue when no worst-case leaf time is known.
inline constexpr std::size_t kDefaultQueueCapacity = 64;

struct RunConfig {
  std::string command;
  Mode mode = Mode::kVertex;
  std::uint32_t k = 0;
  std::string input;
  std::vector<std::string> gen;
  std::vector<std::uint32_t> ks;  // bench only
  std::uint64_t max = 0;
  std::uint64_t seed = 1;
  std::string output;
  bool queue = false;
  std::string csv;
  bool baseline = false;
  bool check_rollback = false;
};

struct LoadedGraph {
  std::string family;
  EdgeList list;
};

using Enumerator =
    std::function<std::uint64_t(DynGraph&, std::uint32_t, Mode, SolutionSink, std::uint64_t)>;

// Loads --input or the first --gen. Throws InputError or std::invalid_argument.
LoadedGraph load_graph(const RunConfig& config);

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_enum(const RunConfig& config, std::ostream& out, std::ostream& err);
// `enumerator` replaces the library enumerator; used to test the comparison.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err,
               const Enumerator& enumerator = {});
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kgraphlet::cli
