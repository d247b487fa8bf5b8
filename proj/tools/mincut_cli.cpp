// Command-line front end: parse -> certificate -> connectivity -> cactus ->
// compact -> sparsify -> enumerate, plus oracle checks, audits and timings.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mincut/cactus.hpp"
#include "mincut/compact.hpp"
#include "mincut/connectivity.hpp"
#include "mincut/enumerate.hpp"
#include "mincut/generators.hpp"
#include "mincut/graph.hpp"
#include "mincut/oracle.hpp"
#include "mincut/sparsify.hpp"

namespace {

using namespace mincut;

constexpr int kVerifyFailed = 1;
constexpr int kUsageError = 2;

struct Flags {
  bool verify = false;
  bool count_only = false;
  unsigned threads = 1;
  std::size_t oracle_limit = oracle::kDefaultLimit;
  std::uint64_t seed = 1;
  std::string input = "-";
  bool flow_oracle = false;
  std::vector<std::string> gen_args;
  std::size_t bench_delta = 20;
  std::size_t bench_lambda = 4;
  std::vector<std::size_t> bench_r{3, 5, 8, 12, 20, 30, 50};
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MultiGraph read_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return parse_graph(text);
}

std::vector<Cut> oracle_cuts(const MultiGraph& g, const Flags& f) {
  if (g.num_vertices() > f.oracle_limit)
    throw UsageError("oracle limit exceeded: n=" + std::to_string(g.num_vertices()) +
                     " > " + std::to_string(f.oracle_limit) + " (raise --oracle-limit)");
  return oracle::enumerate_min_cuts_bruteforce(g, f.oracle_limit).cuts;
}

const char* flag(bool ok) { return ok ? "true" : "false"; }

int report_verification(bool ok, const std::string& detail = {}) {
  std::cerr << "verify=" << (ok ? "pass" : "fail");
  if (!detail.empty()) std::cerr << " " << detail;
  std::cerr << "\n";
  return ok ? 0 : kVerifyFailed;
}

int cmd_mincut(const Flags& f) {
  const MultiGraph g = read_graph(f.input);
  const Analysis a = analyze(g);
  std::cout << "n=" << a.n << "\nm=" << a.m << "\ndelta=" << a.delta << "\nlambda=" << a.lambda << "\n";
  const Cut& first = a.reduced_cuts.front();
  std::vector<char> in(a.reduced.graph.num_vertices(), 0);
  for (Vertex x : first.side) in[x] = 1;
  std::vector<Vertex> side;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (in[a.reduced.vertex_map[v]]) side.push_back(v);
  std::cout << format_edge_cut(g, crossing_edges(g, side)) << "\n";
  if (!f.verify) return 0;
  const auto truth = oracle::enumerate_min_cuts_bruteforce(g, std::max(f.oracle_limit, std::size_t{2}));
  return report_verification(truth.lambda == a.lambda, "oracle_lambda=" + std::to_string(truth.lambda));
}

int cmd_oracle(const Flags& f) {
  const MultiGraph g = read_graph(f.input);
  oracle::MinCuts result;
  if (f.flow_oracle) {
    result = oracle::enumerate_min_cuts_maxflow(g);
  } else {
    if (g.num_vertices() > f.oracle_limit)
      throw UsageError("oracle limit exceeded: n=" + std::to_string(g.num_vertices()) + " > " +
                       std::to_string(f.oracle_limit) + " (raise --oracle-limit)");
    result = oracle::enumerate_min_cuts_bruteforce(g, f.oracle_limit);
  }
  if (f.count_only) {
    std::size_t trivial = 0;
    for (const Cut& c : result.cuts) trivial += c.trivial(g.num_vertices()) ? 1 : 0;
    std::cout << "lambda=" << result.lambda << "\ntotal=" << result.cuts.size() << "\ntrivial=" << trivial
              << "\nnon_trivial=" << result.cuts.size() - trivial << "\n";
    return 0;
  }
  for (const Cut& c : result.cuts) std::cout << format_edge_cut(g, crossing_edges(g, c.side)) << "\n";
  return 0;
}

int cmd_cactus(const Flags& f) {
  const MultiGraph g = read_graph(f.input);
  const Analysis a = analyze(g);
  std::cout << format_cactus(a.cactus);
  if (!f.verify) return 0;
  const auto report = validate_cactus(g, a.cactus, oracle_cuts(g, f));
  return report_verification(report.ok(), "missing=" + std::to_string(report.missing.size()) +
                                              " extra=" + std::to_string(report.extra.size()));
}

void print_audit(const BoundAudit& b) {
  std::cout << "vertices_Kprime=" << b.vertices << " bound=" << b.bound_floor << " pass=" << flag(b.pass) << "\n";
  std::cout << "xylem_leaves=" << b.xylem_leaves << "\nxylem_branching=" << b.xylem_branching
            << "\nlean_paths=" << b.lean.count << "\nlean_path_max=" << b.lean.max_length
            << "\none_junction_singletons=" << b.one_junction_singletons << "\n";
}

int cmd_compact(const Flags& f) {
  const MultiGraph g = read_graph(f.input);
  const Analysis a = analyze(g);
  std::cout << format_cactus(a.compact);
  print_audit(audit_bounds(a.compact, a.n, a.delta));
  std::cout << "rule_i=" << a.compaction.rule_i << "\nrule_ii=" << a.compaction.rule_ii
            << "\nrule_iii=" << a.compaction.rule_iii << "\nrule_iv=" << a.compaction.rule_iv << "\n";
  if (!f.verify) return 0;
  const auto all = oracle_cuts(g, f);
  const auto nc = oracle::non_trivial(all, g.num_vertices());
  const auto represented = represented_cuts(g, a.compact);
  const std::set<Cut> all_set(all.begin(), all.end()), rep_set(represented.begin(), represented.end());
  const bool lower = std::all_of(nc.begin(), nc.end(), [&](const Cut& c) { return rep_set.count(c) > 0; });
  const bool upper = std::all_of(represented.begin(), represented.end(),
                                 [&](const Cut& c) { return all_set.count(c) > 0; });
  const bool minimal = check_minimal(g, a.compact, nc).minimal;
  return report_verification(lower && upper && minimal, std::string("contains_nontrivial=") + flag(lower) +
                                                            " within_mincuts=" + flag(upper) +
                                                            " minimal=" + flag(minimal));
}

int cmd_sparsify(const Flags& f) {
  const MultiGraph g = read_graph(f.input);
  const Analysis a = analyze(g);
  const auto& sp = a.sparsifier;
  std::cout << format_graph(sp.graph);
  for (Vertex v = 0; v < g.num_vertices(); ++v) std::cout << "map " << v << " " << sp.vertex_map[v] << "\n";
  if (!f.verify) return 0;
  const auto nc = oracle::non_trivial(oracle_cuts(g, f), g.num_vertices());
  const auto report = verify_sparsifier(g, sp.graph, sp.vertex_map, nc, a.lambda);
  return report_verification(report.ok(), "edges=" + std::to_string(report.edges) +
                                              " edge_bound=" + std::to_string(report.edge_bound) +
                                              " violations=" + std::to_string(report.violations.size()));
}

int cmd_enumerate(const Flags& f) {
  const MultiGraph g = read_graph(f.input);
  std::vector<Cut> truth;
  if (f.verify) truth = oracle_cuts(g, f);
  std::vector<Cut> seen;
  std::string out;
  auto sink = [&](const EdgeCut& cut) {
    if (!f.count_only) {
      out += format_edge_cut(g, cut);
      out += '\n';
      if (out.size() > (1u << 16)) {
        std::fwrite(out.data(), 1, out.size(), stdout);
        out.clear();
      }
    }
    if (f.verify) seen.push_back({side_of_edge_cut(g, cut), cut.edges.size()});
  };
  const auto summary = enumerate_all_min_cuts(g, sink, {f.threads});
  std::fwrite(out.data(), 1, out.size(), stdout);
  std::fflush(stdout);
  if (f.count_only)
    std::cout << "total=" << summary.total << "\ntrivial=" << summary.trivial
              << "\nnon_trivial=" << summary.non_trivial << "\n";
  if (!f.verify) return 0;
  std::sort(seen.begin(), seen.end());
  const bool unique = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  return report_verification(unique && seen == truth, "listed=" + std::to_string(seen.size()) +
                                                          " oracle=" + std::to_string(truth.size()));
}

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') throw UsageError("expected a non-negative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

int cmd_gen(const Flags& f) {
  const auto& args = f.gen_args;
  if (args.empty()) throw UsageError("gen needs a family: tightness|cliques|cycle|clique|random");
  const std::string& family = args[0];
  auto need = [&](std::size_t count) {
    if (args.size() != count + 1)
      throw UsageError("gen " + family + " expects " + std::to_string(count) + " parameters");
  };
  MultiGraph g;
  if (family == "tightness") {
    need(3);
    g = tightness_graph(to_size(args[1]), to_size(args[2]), to_size(args[3]));
  } else if (family == "cliques") {
    need(2);
    g = disjoint_cliques(to_size(args[1]), to_size(args[2]));
  } else if (family == "cycle") {
    need(1);
    g = cycle_graph(to_size(args[1]));
  } else if (family == "clique") {
    need(1);
    g = clique(to_size(args[1]));
  } else if (family == "random") {
    need(2);
    double p = 0;
    try {
      p = std::stod(args[2]);
    } catch (const std::exception&) {
      throw UsageError("bad edge probability '" + args[2] + "'");
    }
    g = random_connected(to_size(args[1]), p, f.seed);
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  std::cout << format_graph(g);
  return 0;
}

int cmd_audit(const Flags& f) {
  const MultiGraph g = read_graph(f.input);
  Analysis a = analyze(g);
  const auto summary = enumerate_min_cuts(g, a, [](const EdgeCut&) {}, {f.threads});
  const BoundAudit bounds = audit_bounds(a.compact, a.n, a.delta);
  const auto& h = a.sparsifier.graph;
  const std::size_t edge_bound = a.lambda * (h.num_vertices() - 1);
  const bool edges_ok = h.num_edges() <= edge_bound;
  const double scale = static_cast<double>(a.n) / static_cast<double>(a.delta);
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.6f", static_cast<double>(summary.non_trivial) / (scale * scale));
  std::cout << "n=" << a.n << "\nm=" << a.m << "\ndelta=" << a.delta << "\nlambda=" << a.lambda << "\n";
  print_audit(bounds);
  std::cout << "vertices_H=" << h.num_vertices() << "\nedges_H=" << h.num_edges() << " edge_bound=" << edge_bound
            << " pass=" << flag(edges_ok) << "\n";
  std::cout << "min_cuts=" << summary.total << "\ntrivial=" << summary.trivial
            << "\nnon_trivial=" << summary.non_trivial << "\nnon_trivial_per_scale_sq=" << ratio << "\n";
  return bounds.pass && edges_ok ? 0 : kVerifyFailed;
}

int cmd_bench(const Flags& f) {
  using Clock = std::chrono::steady_clock;
  std::vector<double> xs, ys;
  for (std::size_t r : f.bench_r) {
    const std::size_t n = r * (f.bench_delta + 1);
    const MultiGraph g = tightness_graph(n, f.bench_delta, f.bench_lambda);
    const auto start = Clock::now();
    Analysis a = analyze(g);
    const auto summary = enumerate_min_cuts(g, a, [](const EdgeCut&) {}, {f.threads});
    const double total = std::chrono::duration<double>(Clock::now() - start).count();
    const double post = a.timings.post_cactus();
    std::printf("r=%zu n=%zu delta=%zu lambda=%zu cuts=%zu cactus_s=%.6f post_cactus_s=%.6f total_s=%.6f\n", r, n,
                f.bench_delta, f.bench_lambda, summary.total, a.timings.cactus, post, total);
    xs.push_back(std::log(static_cast<double>(r)));
    ys.push_back(std::log(std::max(post, 1e-9)));
  }
  if (xs.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    std::printf("post_cactus_loglog_slope=%.3f\n", sxx > 0 ? sxy / sxx : 0.0);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  Flags f;
  CLI::App app{"Minimum cuts: cactus, compact cactus, sparsifier and full enumeration"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--verify", f.verify, "cross-check against the brute-force oracle");
  app.add_flag("--count-only", f.count_only, "print counts instead of cut lines");
  app.add_option("--threads", f.threads, "worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--oracle-limit", f.oracle_limit, "largest n the brute-force oracle accepts");
  app.add_option("--seed", f.seed, "seed for random generators");

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Flags&);
  };
  const Command commands[] = {
      {"mincut", "edge connectivity and one min-cut", cmd_mincut},
      {"oracle", "all min-cuts by brute force", cmd_oracle},
      {"cactus", "cactus representation of all min-cuts", cmd_cactus},
      {"compact", "compact cactus for the non-trivial min-cuts, with bound audit", cmd_compact},
      {"sparsify", "contraction-based sparsifier with vertex map", cmd_sparsify},
      {"enumerate", "list every min-cut as its crossing edges", cmd_enumerate},
      {"gen", "generate a graph: tightness n d l | cliques n d | cycle n | clique k | random n p", cmd_gen},
      {"audit", "vertex, edge and count bounds", cmd_audit},
      {"bench", "timings over a tightness sweep", cmd_bench},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Flags&)>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (std::string(c.name) == "gen") {
      sub->add_option("args", f.gen_args, "family and parameters")->required();
    } else if (std::string(c.name) == "bench") {
      sub->add_option("--delta", f.bench_delta, "clique size minus one");
      sub->add_option("--lambda", f.bench_lambda, "edge connectivity (even)");
      sub->add_option("--r", f.bench_r, "number of cliques per row")->delimiter(',');
    } else {
      sub->add_option("input", f.input, "graph file, - for stdin");
      if (std::string(c.name) == "oracle") sub->add_flag("--flow", f.flow_oracle, "use the max-flow oracle (n <= 64)");
    }
    subs.emplace_back(sub, c.run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  try {
    for (auto [sub, run] : subs)
      if (sub->parsed()) return run(f);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return kUsageError;
}
