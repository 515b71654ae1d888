#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "kgraphlet/generators.hpp"
#include "kgraphlet/oracle.hpp"
#include "kgraphlet/output_queue.hpp"

namespace kgraphlet::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_k(const RunConfig& config) {
  if (config.k < 1) throw UsageError("-k must be at least 1");
}

// Prints the ids the user knows: original vertex labels in vertex mode,
// input edge indices otherwise.
class SolutionPrinter {
 public:
  SolutionPrinter(std::ostream& out, Mode mode, const EdgeList& list)
      : out_(out), mode_(mode), list_(list) {}

  void operator()(std::span<const std::uint32_t> ids) {
    buf_.clear();
    for (const std::uint32_t id : ids) {
      buf_.push_back(mode_ == Mode::kVertex ? list_.labels[id] : id);
    }
    std::sort(buf_.begin(), buf_.end());
    for (std::size_t i = 0; i < buf_.size(); ++i) {
      if (i > 0) out_ << ' ';
      out_ << buf_[i];
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  Mode mode_;
  const EdgeList& list_;
  std::vector<std::uint64_t> buf_;
};

// Runs one enumeration on a fresh graph; with check_rollback, compares the
// graph with its post-load state afterwards.
int run_enumeration(const RunConfig& config, const EdgeList& list, SolutionSink sink,
                    std::uint64_t& count, std::ostream& err) {
  DynGraph g = list.to_graph();
  std::optional<CanonicalForm> before;
  if (config.check_rollback) before = g.canonical();
  if (config.queue) {
    OutputQueue queue(kDefaultQueueCapacity, sink);
    count = enumerate(g, config.k, config.mode, queue, config.max);
    queue.flush();
  } else {
    count = enumerate(g, config.k, config.mode, sink, config.max);
  }
  if (before && g.canonical() != *before) {
    err << "rollback check failed: graph differs from its loaded state\n";
    return kExitMismatch;
  }
  return kExitOk;
}

void print_sample(std::ostream& err, const char* label,
                  const std::vector<std::vector<std::uint32_t>>& items) {
  err << label << ' ' << items.size() << '\n';
  for (std::size_t i = 0; i < items.size() && i < 5; ++i) {
    err << "  ";
    for (std::size_t j = 0; j < items[i].size(); ++j) err << (j ? " " : "") << items[i][j];
    err << '\n';
  }
}

}  // namespace

LoadedGraph load_graph(const RunConfig& config) {
  if (!config.input.empty() && !config.gen.empty()) {
    throw UsageError("--input and --gen are mutually exclusive");
  }
  if (!config.input.empty()) return {"file", read_edge_list(config.input)};
  if (!config.gen.empty()) {
    auto g = generate(config.gen.front(), config.seed);
    return {g.family, std::move(g.graph)};
  }
  throw UsageError("one of --input or --gen is required");
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_k(config);
  const LoadedGraph loaded = load_graph(config);
  std::uint64_t count = 0;
  auto counter = [](std::span<const std::uint32_t>) {};
  const int status = run_enumeration(config, loaded.list, counter, count, err);
  out << count << '\n';
  return status;
}

int cmd_enum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_k(config);
  const LoadedGraph loaded = load_graph(config);
  std::ofstream file;
  std::ostream* sink_stream = &out;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) throw InputError("cannot write " + config.output);
    sink_stream = &file;
  }
  SolutionPrinter printer(*sink_stream, config.mode, loaded.list);
  std::uint64_t count = 0;
  return run_enumeration(config, loaded.list, printer, count, err);
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err,
               const Enumerator& enumerator) {
  require_k(config);
  const LoadedGraph loaded = load_graph(config);
  if (loaded.list.edges.size() > kVerifyMaxEdges) {
    err << "verify: graph has " << loaded.list.edges.size() << " edges, limit is "
        << kVerifyMaxEdges << '\n';
    return kExitUsage;
  }
  DynGraph g = loaded.list.to_graph();
  const CanonicalForm before = g.canonical();

  SolutionSet want;
  switch (config.mode) {
    case Mode::kVertex:
      want = brute_vertex(g, config.k);
      break;
    case Mode::kEdge:
      want = brute_edge(g, config.k);
      break;
    case Mode::kSubtree:
      want = brute_subtree(g, config.k);
      break;
  }

  SolutionSet got;
  auto collect = [&got](std::span<const std::uint32_t> ids) { got.insert(ids); };
  if (enumerator) {
    enumerator(g, config.k, config.mode, collect, 0);
  } else {
    enumerate(g, config.k, config.mode, collect, 0);
  }
  std::vector<std::vector<std::uint32_t>> missing;
  std::vector<std::vector<std::uint32_t>> extra;
  for (const auto& s : want.sorted()) {
    if (!got.contains(s)) missing.push_back(s);
  }
  for (const auto& s : got.sorted()) {
    if (!want.contains(s)) extra.push_back(s);
  }
  const bool rolled_back = g.canonical() == before;
  if (missing.empty() && extra.empty() && got.repeats() == 0 && rolled_back) {
    out << "ok " << mode_name(config.mode) << " k=" << config.k << " solutions=" << want.size()
        << '\n';
    return kExitOk;
  }
  err << "mismatch " << mode_name(config.mode) << " k=" << config.k
      << ": expected=" << want.size() << " got=" << got.size()
      << " repeats=" << got.repeats() << '\n';
  if (!missing.empty()) print_sample(err, "missing", missing);
  if (!extra.empty()) print_sample(err, "extra", extra);
  if (!rolled_back) err << "graph was not restored\n";
  return kExitMismatch;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.gen.empty()) throw UsageError("bench needs at least one --gen");
  std::vector<std::uint32_t> ks = config.ks;
  if (ks.empty() && config.k > 0) ks.push_back(config.k);
  if (ks.empty()) throw UsageError("bench needs -k");
  for (const std::uint32_t k : ks) {
    if (k < 1) throw UsageError("-k must be at least 1");
  }
  if (config.baseline && config.mode == Mode::kVertex) {
    throw UsageError("--baseline supports edge and subtree modes only");
  }

  std::ofstream file;
  std::ostream* csv = &out;
  if (!config.csv.empty()) {
    file.open(config.csv);
    if (!file) throw InputError("cannot write " + config.csv);
    csv = &file;
  }
  *csv << kBenchCsvHeader << '\n';
  for (const auto& spec : config.gen) {
    auto generated = generate(spec, config.seed);
    for (const std::uint32_t k : ks) {
      BenchRecord r = run_bench(generated.family, generated.graph, k, config.mode, config.max);
      write_csv_row(*csv, r);
      if (config.baseline) {
        BenchRecord b = run_bench(generated.family + "-naive", generated.graph, k, config.mode,
                                  config.max, Algorithm::kNaive);
        write_csv_row(*csv, b);
      }
    }
  }
  csv->flush();
  if (!config.csv.empty()) err << "wrote " << config.csv << '\n';
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate k-graphlets, edge k-graphlets and k-subtrees"};
  app.require_subcommand(1);
  RunConfig config;
  std::string mode_text = "vertex";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", mode_text, "vertex, edge or subtree")
        ->check(CLI::IsMember({"vertex", "edge", "subtree"}));
    sub->add_option("--input", config.input, "edge list file");
    sub->add_option("--seed", config.seed, "generator seed");
  };

  auto* count = app.add_subcommand("count", "print the number of solutions");
  auto* enumerate_cmd = app.add_subcommand("enum", "print one solution per line");
  auto* verify = app.add_subcommand("verify", "compare with exhaustive search");
  auto* bench = app.add_subcommand("bench", "time enumeration on generated graphs");
  for (auto* sub : {count, enumerate_cmd, verify}) {
    add_common(sub);
    sub->add_option("-k", config.k, "solution size")->required();
    sub->add_option("--gen", config.gen, "generator spec, e.g. gnm:100:300")->expected(1);
    sub->add_option("--max", config.max, "stop after this many solutions (0 = all)");
    sub->add_flag("--check-rollback", config.check_rollback,
                  "fail if the graph is not restored after the run");
  }
  for (auto* sub : {count, enumerate_cmd}) {
    sub->add_flag("--queue", config.queue, "route solutions through an output queue");
  }
  enumerate_cmd->add_option("--output", config.output, "write solutions to a file");
  add_common(bench);
  bench->add_option("-k", config.ks, "solution sizes")->required();
  bench->add_option("--gen", config.gen, "generator specs")->required();
  bench->add_option("--max", config.max, "cap solutions per run (0 = all)");
  bench->add_option("--csv", config.csv, "write CSV here instead of stdout");
  bench->add_flag("--baseline", config.baseline, "also time the naive comparator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kExitOk : kExitUsage;
  }
  parse_mode(mode_text, config.mode);

  try {
    if (*count) return cmd_count(config, out, err);
    if (*enumerate_cmd) return cmd_enum(config, out, err);
    if (*verify) return cmd_verify(config, out, err);
    return cmd_bench(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace kgraphlet::cli
