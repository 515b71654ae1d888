// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cli.hpp"
#include "kgraphlet/bench.hpp"
#include "kgraphlet/edge_enum.hpp"
#include "kgraphlet/generators.hpp"
#include "kgraphlet/oracle.hpp"

using namespace kgraphlet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const Outcome& o) {
  std::printf("criterion %d %-28s %s  %s\n", id, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t count(const EdgeList& list, std::uint32_t k, Mode mode) {
  DynGraph g = list.to_graph();
  return enumerate(g, k, mode, [](std::span<const std::uint32_t>) {});
}

// Hash of every emitted canonical solution, kept with its content so that
// equal hashes with different content are told apart from true repeats.
struct DuplicateLedger {
  std::unordered_map<std::size_t, std::vector<std::vector<std::uint32_t>>> by_hash;
  std::uint64_t repeats = 0;
  std::uint64_t collisions = 0;
  std::uint64_t total = 0;

  void start_run() { by_hash.clear(); }
  void add(std::span<const std::uint32_t> ids) {
    auto sol = canonical_ids(ids);
    auto& bucket = by_hash[IdListHash{}(sol)];
    ++total;
    if (std::find(bucket.begin(), bucket.end(), sol) != bucket.end()) {
      ++repeats;
      return;
    }
    if (!bucket.empty()) ++collisions;
    bucket.push_back(std::move(sol));
  }
};

struct RandomSuite {
  std::uint64_t graphs = 0;
  std::uint64_t runs = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t rollback_failures = 0;
  std::uint64_t line_graph_checked = 0;
  std::uint64_t line_graph_mismatches = 0;
  EdgeEnumAudit audit;
  DuplicateLedger dups;
};

EdgeList random_edge_list(std::mt19937_64& rng, std::uint32_t max_n, std::uint64_t max_m) {
  const auto n = static_cast<std::uint32_t>(1 + rng() % max_n);
  const std::uint64_t cap = std::min<std::uint64_t>(max_m, std::uint64_t{n} * (n - 1) / 2);
  const std::uint64_t m = rng() % (cap + 1);
  return gnm_graph(n, m, rng());
}

void run_random_suite(RandomSuite& s) {
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 600; ++t) {
    const EdgeList list = random_edge_list(rng, 10, 12);
    DynGraph g = list.to_graph();
    const CanonicalForm before = g.canonical();
    ++s.graphs;

    for (std::uint32_t k = 1; k <= g.num_vertices(); ++k) {
      SolutionSet got;
      s.dups.start_run();
      enumerate(g, k, Mode::kVertex, [&](std::span<const std::uint32_t> ids) {
        got.insert(ids);
        s.dups.add(ids);
      });
      ++s.runs;
      if (!(got == brute_vertex(g, k)) || got.repeats() != 0) ++s.mismatches;
      if (g.canonical() != before) ++s.rollback_failures;
    }

    for (std::uint32_t k = 1; k <= g.num_edges(); ++k) {
      for (const EdgeMode mode : {EdgeMode::kGraphlet, EdgeMode::kSubtree}) {
        SolutionSet got;
        s.dups.start_run();
        enumerate_edge_graphlets(
            g, k, mode,
            [&](std::span<const std::uint32_t> ids) {
              got.insert(ids);
              s.dups.add(ids);
            },
            0, &s.audit);
        ++s.runs;
        const SolutionSet want =
            mode == EdgeMode::kGraphlet ? brute_edge(g, k) : brute_subtree(g, k);
        if (!(got == want) || got.repeats() != 0) ++s.mismatches;
        if (g.canonical() != before) ++s.rollback_failures;
      }
    }

    if (g.num_edges() <= 10) {
      LineGraph lg = line_graph(g);
      for (std::uint32_t k = 1; k <= g.num_edges(); ++k) {
        ++s.line_graph_checked;
        DynGraph& h = lg.graph;
        const std::uint64_t a = enumerate(g, k, Mode::kEdge, [](std::span<const std::uint32_t>) {});
        const std::uint64_t b = enumerate(h, k, Mode::kVertex, [](std::span<const std::uint32_t>) {});
        if (a != b) ++s.line_graph_mismatches;
      }
    }
  }
}

// Extra audited runs on larger graphs, where far edges and heavy edges are
// common.
void run_audit_suite(EdgeEnumAudit& audit) {
  std::mt19937_64 rng(77);
  std::vector<EdgeList> graphs;
  for (int t = 0; t < 40; ++t) graphs.push_back(random_edge_list(rng, 30, 60));
  graphs.push_back(grid_graph(5, 5));
  graphs.push_back(hub_graph(12));
  graphs.push_back(path_graph(40));
  graphs.push_back(cycle_graph(25));
  for (const EdgeList& list : graphs) {
    DynGraph g = list.to_graph();
    for (std::uint32_t k = 2; k <= 7; ++k) {
      for (const EdgeMode mode : {EdgeMode::kGraphlet, EdgeMode::kSubtree}) {
        enumerate_edge_graphlets(g, k, mode, [](std::span<const std::uint32_t>) {}, 200000,
                                 &audit);
      }
    }
  }
}

Outcome fig1_counts() {
  const EdgeList list = read_edge_list(std::string(KG_TEST_DATA) + "/fig1.txt");
  const std::uint64_t v = count(list, 3, Mode::kVertex);
  const std::uint64_t e = count(list, 3, Mode::kEdge);
  const std::uint64_t s = count(list, 3, Mode::kSubtree);
  Outcome o;
  o.pass = v == 4 && e == 10 && s == 8;
  o.detail = "vertex=" + std::to_string(v) + " edge=" + std::to_string(e) +
             " subtree=" + std::to_string(s);
  return o;
}

Outcome analytic_families() {
  struct Case {
    std::string name;
    EdgeList list;
    std::uint32_t k;
    Mode mode;
    std::uint64_t expected;
  };
  std::vector<Case> cases;
  const std::uint32_t n = 10000;
  const EdgeList path = path_graph(n);
  for (const std::uint32_t k : {1u, 2u, 5u, 100u}) {
    cases.push_back({"path", path, k, Mode::kVertex, n - k + 1});
    cases.push_back({"path", path, k, Mode::kEdge, (n - 1) - k + 1});
  }
  const EdgeList cycle = cycle_graph(n);
  for (const std::uint32_t k : {1u, 3u, 50u, 100u}) {
    cases.push_back({"cycle", cycle, k, Mode::kVertex, n});
    cases.push_back({"cycle", cycle, k, Mode::kEdge, n});
  }
  auto star_cases = [&](std::uint32_t leaves, std::initializer_list<std::uint32_t> ks) {
    const EdgeList star = star_graph(leaves);
    for (const std::uint32_t k : ks) {
      cases.push_back({"star", star, k, Mode::kEdge, binomial(leaves, k)});
      cases.push_back({"star", star, k, Mode::kSubtree, binomial(leaves, k)});
    }
  };
  star_cases(n, {1, 2});
  star_cases(300, {3});
  star_cases(60, {5});
  star_cases(2000, {1999, 2000});
  auto complete_cases = [&](std::uint32_t size, std::initializer_list<std::uint32_t> ks) {
    const EdgeList kn = complete_graph(size);
    for (const std::uint32_t k : ks) cases.push_back({"complete", kn, k, Mode::kVertex, binomial(size, k)});
  };
  complete_cases(1000, {1, 2});
  complete_cases(100, {3});
  complete_cases(30, {5});
  complete_cases(12, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});

  Outcome o;
  std::size_t ok = 0;
  for (const Case& c : cases) {
    const std::uint64_t got = count(c.list, c.k, c.mode);
    if (got == c.expected) {
      ++ok;
    } else if (o.pass) {
      o.pass = false;
      o.detail = c.name + " k=" + std::to_string(c.k) + " " + mode_name(c.mode) + ": got " +
                 std::to_string(got) + " want " + std::to_string(c.expected) + "; ";
    }
  }
  o.detail += std::to_string(ok) + "/" + std::to_string(cases.size()) + " exact";
  return o;
}

struct Series {
  std::vector<BenchRecord> fast;
  std::vector<BenchRecord> naive;
};

double spread(const std::vector<BenchRecord>& rows) {
  double lo = rows.front().ns_per_solution;
  double hi = lo;
  for (const auto& r : rows) {
    lo = std::min(lo, r.ns_per_solution);
    hi = std::max(hi, r.ns_per_solution);
  }
  return hi / lo;
}

// Largest instance over smallest instance.
double growth(const std::vector<BenchRecord>& rows) {
  return rows.back().ns_per_solution / rows.front().ns_per_solution;
}

std::string format_ratio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", r);
  return buf;
}

Outcome scaling() {
  constexpr std::uint32_t k = 4;
  constexpr std::uint64_t fast_cap = 5000000;
  constexpr std::uint64_t naive_cap = 100;
  Series gnm;
  Series hub;
  for (const std::uint32_t n : {1000u, 10000u, 100000u}) {
    const EdgeList g = gnm_graph(n, 3ull * n, 1);
    gnm.fast.push_back(run_bench("gnm", g, k, Mode::kEdge, fast_cap));
    gnm.naive.push_back(run_bench("gnm-naive", g, k, Mode::kEdge, naive_cap, Algorithm::kNaive));
  }
  for (const std::uint32_t d : {100u, 1000u, 10000u}) {
    const EdgeList g = hub_graph(d);
    hub.fast.push_back(run_bench("hub", g, k, Mode::kEdge, fast_cap));
    hub.naive.push_back(run_bench("hub-naive", g, k, Mode::kEdge, naive_cap, Algorithm::kNaive));
  }
  std::ostringstream csv;
  csv << kBenchCsvHeader << '\n';
  for (const Series* s : {&gnm, &hub}) {
    for (const auto& r : s->fast) write_csv_row(csv, r);
    for (const auto& r : s->naive) write_csv_row(csv, r);
  }
  std::printf("%s", csv.str().c_str());

  const double gnm_spread = spread(gnm.fast);
  const double hub_spread = spread(hub.fast);
  const double gnm_naive = growth(gnm.naive);
  const double hub_naive = growth(hub.naive);
  Outcome o;
  o.pass = gnm_spread <= 4 && hub_spread <= 4 && gnm_naive > 4 && hub_naive > 4;
  o.detail = "fast spread gnm=" + format_ratio(gnm_spread) + " hub=" + format_ratio(hub_spread) +
             "; naive growth gnm=" + format_ratio(gnm_naive) + " hub=" + format_ratio(hub_naive);
  return o;
}

Outcome cli_rollback() {
  const std::string fig1 = std::string(KG_TEST_DATA) + "/fig1.txt";
  std::vector<std::vector<std::string>> runs;
  for (const char* mode : {"vertex", "edge", "subtree"}) {
    for (const char* k : {"1", "3", "5"}) {
      runs.push_back({"count", "--mode", mode, "-k", k, "--input", fig1});
      runs.push_back({"enum", "--mode", mode, "-k", k, "--gen", "gnm:40:90", "--seed", "3"});
      runs.push_back({"enum", "--mode", mode, "-k", k, "--gen", "grid:6:6", "--queue"});
      runs.push_back({"count", "--mode", mode, "-k", k, "--gen", "hub:50", "--max", "1000"});
      runs.push_back({"verify", "--mode", mode, "-k", k, "--input", fig1});
    }
  }
  std::size_t ok = 0;
  for (auto args : runs) {
    args.insert(args.begin(), "kgraphlet");
    args.push_back("--check-rollback");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run(static_cast<int>(argv.size()), argv.data(), out, err) == cli::kExitOk) ++ok;
  }
  Outcome o;
  o.pass = ok == runs.size();
  o.detail = std::to_string(ok) + "/" + std::to_string(runs.size()) + " runs restored";
  return o;
}

}  // namespace

int main() {
  RandomSuite suite;
  run_random_suite(suite);
  EdgeEnumAudit& audit = suite.audit;
  run_audit_suite(audit);

  report(1, "oracle-equivalence",
         {suite.mismatches == 0 && suite.graphs >= 500,
          std::to_string(suite.graphs) + " graphs, " + std::to_string(suite.runs) +
              " runs, mismatches=" + std::to_string(suite.mismatches)});
  report(2, "figure1-counts", fig1_counts());
  report(3, "analytic-families", analytic_families());
  report(4, "line-graph-crosscheck",
         {suite.line_graph_mismatches == 0 && suite.line_graph_checked > 0,
          std::to_string(suite.line_graph_checked) + " (graph, k) pairs, mismatches=" +
              std::to_string(suite.line_graph_mismatches)});

  const std::uint64_t trim_violations = audit.far_trim_violations +
                                        audit.include_trim_violations +
                                        audit.exclude_trim_violations;
  report(5, "trimming-properties",
         {trim_violations == 0 && audit.exclude_trim_checks > 0 && audit.far_trim_checks > 0,
          "checks far=" + std::to_string(audit.far_trim_checks) +
              " include=" + std::to_string(audit.include_trim_checks) +
              " exclude=" + std::to_string(audit.exclude_trim_checks) +
              ", violations=" + std::to_string(trim_violations)});
  const std::uint64_t heavy_violations =
      audit.multiple_heavy_violations + audit.no_light_violations;
  report(6, "heavy-edge-property",
         {heavy_violations == 0 && audit.heavy_checks > 0,
          "instances=" + std::to_string(audit.heavy_checks) +
              ", violations=" + std::to_string(heavy_violations)});
  report(7, "scaling-trend", scaling());

  Outcome rollback = cli_rollback();
  rollback.pass = rollback.pass && suite.rollback_failures == 0;
  rollback.detail += ", library runs failing=" + std::to_string(suite.rollback_failures);
  report(8, "rollback-integrity", rollback);
  report(9, "duplicate-freedom",
         {suite.dups.repeats == 0 && suite.dups.collisions == 0,
          std::to_string(suite.dups.total) + " solutions hashed, repeats=" +
              std::to_string(suite.dups.repeats) +
              " collisions=" + std::to_string(suite.dups.collisions)});
  return failures == 0 ? 0 : 1;
}
