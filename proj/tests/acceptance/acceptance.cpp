// End-to-end acceptance run: one PASS/FAIL line per criterion, exit code 0
// only if every criterion passes.

#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mincut/cactus.hpp"
#include "mincut/compact.hpp"
#include "mincut/enumerate.hpp"
#include "mincut/generators.hpp"
#include "mincut/oracle.hpp"
#include "mincut/sparsify.hpp"
#include "support/corpus.hpp"

#ifndef MINCUT_CLI_PATH
#error "MINCUT_CLI_PATH must point at the command-line binary"
#endif

namespace {

using namespace mincut;

// Pinned limits.
constexpr double kScalingSeconds = 60.0;
constexpr long kScalingMemoryKiB = 1024L * 1024L;
// Quadratic growth; the fit is over min-of-repeats timings, 0.25 absorbs
// timer noise at millisecond scale.
constexpr double kMaxSlope = 2.0 + 0.25;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checked = 0;
  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

void print(int number, const std::string& title, const Outcome& o) {
  std::printf("criterion %d: %s - %s (%zu checks)%s%s\n", number, o.pass ? "PASS" : "FAIL", title.c_str(), o.checked,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<Cut> enumerate_sides(const MultiGraph& g, Analysis& a, std::size_t* bad_size = nullptr) {
  std::vector<Cut> sides;
  enumerate_min_cuts(g, a, [&](const EdgeCut& cut) {
    if (cut.edges.size() != a.lambda && bad_size) ++*bad_size;
    sides.push_back({side_of_edge_cut(g, cut), cut.edges.size()});
  });
  std::sort(sides.begin(), sides.end());
  return sides;
}

std::set<Cut> as_set(const std::vector<Cut>& v) { return {v.begin(), v.end()}; }

struct CorpusResult {
  Outcome c1, c2, c4, c5, c6;
};

void check_corpus_graph(const testing::CorpusEntry& entry, CorpusResult& r) {
  const MultiGraph& g = entry.graph;
  const std::size_t n = g.num_vertices();
  const auto truth = oracle::enumerate_min_cuts_bruteforce(g, 12);
  const auto nc = oracle::non_trivial(truth.cuts, n);
  Analysis a = analyze(g);

  // 1: enumeration equals the oracle.
  ++r.c1.checked;
  std::size_t bad = 0;
  const auto listed = enumerate_sides(g, a, &bad);
  if (a.lambda != truth.lambda) r.c1.fail(entry.name + ": lambda differs");
  if (listed != truth.cuts || bad) r.c1.fail(entry.name + ": listed cuts differ from oracle");

  // 2: cactus clauses, sandwich, minimality.
  ++r.c2.checked;
  if (!validate_cactus(g, a.cactus, truth.cuts).ok()) r.c2.fail(entry.name + ": cactus invalid");
  const auto represented = represented_cuts(g, a.compact);
  const auto all = as_set(truth.cuts), rep = as_set(represented);
  for (const Cut& c : nc)
    if (!rep.count(c)) r.c2.fail(entry.name + ": compact cactus misses a non-trivial cut");
  for (const Cut& c : represented)
    if (!all.count(c)) r.c2.fail(entry.name + ": compact cactus represents a non-min-cut");
  if (!check_minimal(g, a.compact, nc).minimal) r.c2.fail(entry.name + ": compact cactus not minimal");

  // 4: bounds.
  ++r.c4.checked;
  if (!audit_bounds(a.compact, n, a.delta).pass) r.c4.fail(entry.name + ": vertex bound");
  const auto& h = a.sparsifier.graph;
  if (h.num_edges() > a.lambda * (a.compact.num_nodes() - 1)) r.c4.fail(entry.name + ": edge bound");
  if (!verify_sparsifier(g, h, a.sparsifier.vertex_map, nc, a.lambda).ok())
    r.c4.fail(entry.name + ": sparsifier lost a cut");

  // 5: structure.
  ++r.c5.checked;
  if (compaction_patterns(a.compact).total() != 0) r.c5.fail(entry.name + ": rule pattern left after compaction");
  if (!check_cycle_edge_distribution(g, a.compact, a.lambda).empty() ||
      !check_cycle_edge_distribution(g, a.cactus, a.lambda).empty())
    r.c5.fail(entry.name + ": cycle edge distribution");
  if (!check_nonempty_sides(a.compact).empty()) r.c5.fail(entry.name + ": empty cycle side");
  if (a.delta >= 3) {
    if (!check_singleton_spacing(a.compact).empty()) r.c5.fail(entry.name + ": adjacent 1-junction singletons");
    if (!check_pruned_leaves(a.compact, a.delta).empty()) r.c5.fail(entry.name + ": pruned xylem leaves");
  }

  // 6: closed sets of every DAG before and after embedding.
  std::vector<CutDag> dags = build_d1(a.compact);
  const auto k2 = contract_2cycles(a.compact);
  std::vector<std::size_t> sizes(a.compact.num_nodes());
  for (Node x = 0; x < a.compact.num_nodes(); ++x) sizes[x] = a.compact.preimage_size(x);
  for (CutDag& d : build_d2(k2.cactus, k2.node_map, sizes)) dags.push_back(std::move(d));
  for (const CutDag& dag : dags) {
    if (dag.num_vertices > 20) continue;
    ++r.c6.checked;
    auto before = list_closed_sets(dag, false);
    auto after = list_closed_sets(embed_edges(dag, h), true);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    if (before != after) r.c6.fail(entry.name + ": closed sets change under embedding");
  }
}

Outcome criterion3() {
  Outcome o;
  for (std::size_t delta : {8, 12, 20}) {
    for (std::size_t r = 3; r <= 10; ++r) {
      const std::size_t n = r * (delta + 1);
      const MultiGraph g = tightness_graph(n, delta, 4);
      Analysis a = analyze(g);
      std::size_t bad = 0;
      const auto listed = enumerate_sides(g, a, &bad);
      ++o.checked;
      const std::string name = "tightness(" + std::to_string(n) + "," + std::to_string(delta) + ",4)";
      if (listed.size() != r * (r - 1) / 2) o.fail(name + ": " + std::to_string(listed.size()) + " cuts");
      if (bad) o.fail(name + ": cut with wrong edge count");
      for (const Cut& c : listed)
        if (c.trivial(n)) o.fail(name + ": trivial cut listed");
      if (r <= 7 && n <= oracle::kFlowLimit) {
        ++o.checked;
        if (oracle::enumerate_min_cuts_maxflow(g).cuts != listed) o.fail(name + ": max-flow oracle disagrees");
      }
    }
  }
  return o;
}

void criterion4_tightness(Outcome& o) {
  const std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sweep{
      {8, {3, 10, 30, 60, 100}}, {20, {3, 10, 50, 100}}, {99, {3, 20, 100}}, {199, {3, 25, 50, 100}}};
  for (const auto& [delta, rs] : sweep)
    for (std::size_t r : rs) {
      const std::size_t n = r * (delta + 1);
      const MultiGraph g = tightness_graph(n, delta, 4);
      const Analysis a = analyze(g);
      ++o.checked;
      const std::string name = "tightness(" + std::to_string(n) + "," + std::to_string(delta) + ",4)";
      if (!audit_bounds(a.compact, n, a.delta).pass) o.fail(name + ": vertex bound");
      if (a.sparsifier.graph.num_edges() > a.lambda * (a.compact.num_nodes() - 1)) o.fail(name + ": edge bound");
    }
}

struct ProcessResult {
  int status = -1;
  double seconds = 0;
  long max_rss_kib = 0;
  std::string output;
};

ProcessResult run_cli(const std::vector<std::string>& args, const std::string& stdout_path) {
  ProcessResult result;
  const auto start = std::chrono::steady_clock::now();
  const pid_t pid = fork();
  if (pid == 0) {
    FILE* out = std::freopen(stdout_path.c_str(), "w", stdout);
    if (!out) _exit(127);
    std::vector<char*> argv;
    std::string program = MINCUT_CLI_PATH;
    argv.push_back(program.data());
    std::vector<std::string> copy = args;
    for (auto& a : copy) argv.push_back(a.data());
    argv.push_back(nullptr);
    execv(program.c_str(), argv.data());
    _exit(127);
  }
  int status = 0;
  struct rusage usage {};
  wait4(pid, &status, 0, &usage);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.max_rss_kib = usage.ru_maxrss;
  std::ifstream in(stdout_path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "acceptance_" + name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

Outcome criterion7() {
  Outcome o;
  const std::size_t n = 20000, delta = 199;
  const std::string input = write_temp("scale.txt", format_graph(tightness_graph(n, delta, 4)));
  const ProcessResult run = run_cli({"enumerate", "--count-only", input}, "acceptance_scale.out");
  ++o.checked;
  const std::size_t r = n / (delta + 1);
  const std::string expected = "total=" + std::to_string(r * (r - 1) / 2) + "\n";
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=%zu: %.2fs, %.1f MiB", n, run.seconds, static_cast<double>(run.max_rss_kib) / 1024);
  o.detail = buf;
  if (run.status != 0 || run.output.find(expected) == std::string::npos) o.fail(std::string(buf) + ", wrong output");
  if (run.seconds >= kScalingSeconds) o.fail(std::string(buf) + ", too slow");
  if (run.max_rss_kib >= kScalingMemoryKiB) o.fail(std::string(buf) + ", too much memory");

  // Post-cactus phases over an r-sweep at fixed delta; log-log slope in n/delta.
  std::vector<double> xs, ys;
  for (std::size_t rr : {10, 20, 40, 70, 100}) {
    const MultiGraph g = tightness_graph(rr * 9, 8, 4);
    double best = 1e100;
    for (int rep = 0; rep < 5; ++rep) {
      Analysis a = analyze(g);
      enumerate_min_cuts(g, a, [](const EdgeCut&) {});
      best = std::min(best, a.timings.post_cactus());
    }
    xs.push_back(std::log(static_cast<double>(rr)));
    ys.push_back(std::log(best));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) sxy += (xs[i] - mx) * (ys[i] - my), sxx += (xs[i] - mx) * (xs[i] - mx);
  const double slope = sxy / sxx;
  ++o.checked;
  std::snprintf(buf, sizeof buf, "%s; post-cactus slope %.2f", o.detail.c_str(), slope);
  if (o.pass) o.detail = buf;
  if (slope > kMaxSlope) o.fail(buf);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::vector<std::pair<std::string, MultiGraph>> inputs{
      {"tight", tightness_graph(36, 8, 4)},
      {"random", random_connected(10, 0.5, 7)},
      {"cycle", cycle_graph(6)},
      {"mixed", random_connected(9, 0.35, 99)},
  };
  const std::vector<std::vector<std::string>> commands{
      {"mincut"}, {"oracle", "--flow"}, {"cactus"}, {"compact"}, {"sparsify"},
      {"enumerate"}, {"enumerate", "--count-only"}, {"audit"},
  };
  for (const auto& [name, g] : inputs) {
    const std::string path = write_temp(name + ".txt", format_graph(g));
    for (auto args : commands) {
      args.push_back(path);
      const auto first = run_cli(args, "acceptance_det1.out");
      const auto second = run_cli(args, "acceptance_det2.out");
      ++o.checked;
      if (first.status != 0 || first.output.empty() || first.output != second.output)
        o.fail(args[0] + " on " + name + " is not reproducible");
    }
    auto threaded = run_cli({"enumerate", "--threads", "4", path}, "acceptance_det1.out");
    auto single = run_cli({"enumerate", path}, "acceptance_det2.out");
    ++o.checked;
    if (threaded.output != single.output) o.fail("thread count changes enumerate output on " + name);
  }
  for (int rep = 0; rep < 2; ++rep) {
    auto a = run_cli({"gen", "random", "12", "0.4", "--seed", "5"}, "acceptance_det1.out");
    auto b = run_cli({"gen", "random", "12", "0.4", "--seed", "5"}, "acceptance_det2.out");
    ++o.checked;
    if (a.output.empty() || a.output != b.output) o.fail("gen random is not reproducible");
  }
  // Timing fields of bench rows vary by design; everything else must not.
  auto strip = [](const std::string& s) {
    std::string out;
    std::istringstream in(s);
    for (std::string tok; in >> tok;)
      if (tok.find("_s=") == std::string::npos && tok.find("slope=") == std::string::npos) out += tok + " ";
    return out;
  };
  auto a = run_cli({"bench", "--r", "3,4", "--delta", "8"}, "acceptance_det1.out");
  auto b = run_cli({"bench", "--r", "3,4", "--delta", "8"}, "acceptance_det2.out");
  ++o.checked;
  if (a.status != 0 || strip(a.output) != strip(b.output)) o.fail("bench rows differ beyond timings");
  return o;
}

}  // namespace

int main() {
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  {
    const auto corpus = testing::oracle_corpus();
    CorpusResult r;
    for (const auto& entry : corpus) {
      try {
        check_corpus_graph(entry, r);
      } catch (const std::exception& e) {
        r.c1.fail(entry.name + ": " + e.what());
      }
    }
    Outcome c4 = r.c4;
    criterion4_tightness(c4);
    print(1, "enumeration equals brute-force oracle on the corpus", r.c1);
    print(2, "cactus clauses, compact sandwich and minimality", r.c2);
    const Outcome c3 = criterion3();
    print(3, "tightness family counts", c3);
    print(4, "vertex and edge bounds", c4);
    print(5, "structural invariants after compaction", r.c5);
    print(6, "closed sets preserved by edge embedding", r.c6);
    all = r.c1.pass && r.c2.pass && c3.pass && c4.pass && r.c5.pass && r.c6.pass;
  }
  const Outcome c7 = criterion7();
  print(7, "scaling on tightness(20000,199,4)", c7);
  const Outcome c8 = criterion8();
  print(8, "byte-identical repeated runs", c8);
  all = all && c7.pass && c8.pass;
  std::printf("acceptance: %s in %.1fs\n", all ? "PASS" : "FAIL",
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return all ? 0 : 1;
}
