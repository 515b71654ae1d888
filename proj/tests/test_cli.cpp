#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"

using namespace kgtest;
namespace cli = kgraphlet::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "kgraphlet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kFig1 = std::string(KG_TEST_DATA) + "/fig1.txt";

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_path(const char* name) {
  return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("count on K4 minus an edge") {
  CHECK(run({"count", "--mode", "vertex", "-k", "3", "--input", kFig1}).out == "4\n");
  CHECK(run({"count", "--mode", "edge", "-k", "3", "--input", kFig1}).out == "10\n");
  CHECK(run({"count", "--mode", "subtree", "-k", "3", "--input", kFig1}).out == "8\n");
  CHECK(run({"count", "--mode", "edge", "-k", "3", "--input", kFig1, "--queue"}).out == "10\n");
}

TEST_CASE("enum honours the cap and prints valid solutions") {
  const Result r = run({"enum", "--mode", "subtree", "-k", "3", "--max", "2", "--gen", "cycle:6"});
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  DynGraph c6 = cycle_graph(6).to_graph();
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::vector<EdgeId> ids;
    for (EdgeId e; in >> e;) ids.push_back(e);
    CHECK(ids.size() == 3);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(edges_connected(c6, ids));
    CHECK(edges_acyclic(c6, ids));
  }
}

TEST_CASE("enum prints original vertex labels") {
  const std::string path = temp_path("kg_labels.txt");
  std::ofstream(path) << "100 7\n7 42\n";
  const Result r = run({"enum", "--mode", "vertex", "-k", "2", "--input", path});
  CHECK(r.out == "7 42\n7 100\n");
  const std::string out_path = temp_path("kg_labels_out.txt");
  CHECK(run({"enum", "--mode", "vertex", "-k", "3", "--input", path, "--output", out_path})
            .out.empty());
  std::ifstream written(out_path);
  std::string line;
  std::getline(written, line);
  CHECK(line == "7 42 100");
  std::remove(path.c_str());
  std::remove(out_path.c_str());
}

TEST_CASE("identical runs give identical output") {
  const std::vector<std::string> args{"enum", "--mode", "edge", "-k", "4", "--gen", "gnm:30:60",
                                      "--seed", "5"};
  const Result a = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == run(args).out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("verify succeeds on K4 minus an edge") {
  for (const char* mode : {"vertex", "edge", "subtree"}) {
    for (int k = 1; k <= 5; ++k) {
      const Result r = run({"verify", "--mode", mode, "-k", std::to_string(k), "--input", kFig1,
                            "--check-rollback"});
      CHECK(r.code == 0);
    }
  }
}

TEST_CASE("verify detects a broken enumerator") {
  cli::RunConfig config;
  config.command = "verify";
  config.mode = Mode::kEdge;
  config.k = 3;
  config.input = kFig1;
  std::ostringstream out;
  std::ostringstream err;
  const cli::Enumerator drops_first = [](DynGraph& g, std::uint32_t k, Mode mode,
                                         SolutionSink emit, std::uint64_t limit) {
    bool first = true;
    return enumerate(
        g, k, mode,
        [&](std::span<const std::uint32_t> ids) {
          if (!first) emit(ids);
          first = false;
        },
        limit);
  };
  CHECK(cli::cmd_verify(config, out, err, drops_first) == cli::kExitMismatch);
  CHECK(err.str().find("missing 1") != std::string::npos);
}

TEST_CASE("verify on an empty graph") {
  const std::string path = temp_path("kg_empty.txt");
  std::ofstream(path) << "# nothing\n";
  CHECK(run({"verify", "--mode", "vertex", "-k", "1", "--input", path}).code == 0);
  std::remove(path.c_str());
}

TEST_CASE("verify refuses large graphs") {
  const Result r = run({"verify", "--mode", "edge", "-k", "2", "--gen", "path:30"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("limit is 24") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({"count", "--mode", "vertex", "-k", "0", "--input", kFig1}).code == 2);
  CHECK(run({"count", "--mode", "blob", "-k", "3", "--input", kFig1}).code == 2);
  CHECK(run({"count", "--mode", "vertex", "-k", "3"}).code == 2);
  CHECK(run({"count", "-k", "3", "--gen", "blob:3"}).code == 2);
  const std::string path = temp_path("kg_bad.txt");
  std::ofstream(path) << "0 1\n1 1\n";
  const Result r = run({"count", "-k", "2", "--input", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("bench writes CSV rows") {
  const Result r = run({"bench", "--mode", "vertex", "-k", "5", "--gen", "path:10000"});
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == kBenchCsvHeader);
  CHECK(lines[1].rfind("path,10000,9999,2,5,vertex,9996,", 0) == 0);

  const Result b = run({"bench", "--mode", "edge", "-k", "3", "-k", "4", "--gen", "hub:20",
                        "--gen", "grid:4:4", "--baseline"});
  const auto rows = lines_of(b.out);
  CHECK(rows.size() == 9);
  CHECK(rows[2].rfind("hub-naive,21,40,20,3,edge,", 0) == 0);
  CHECK(run({"bench", "--mode", "vertex", "-k", "3", "--gen", "path:5", "--baseline"}).code == 2);
}

TEST_CASE("rollback check passes after each command") {
  for (const char* mode : {"vertex", "edge", "subtree"}) {
    CHECK(run({"count", "--mode", mode, "-k", "4", "--gen", "gnm:40:80", "--check-rollback"})
              .code == 0);
  }
}
