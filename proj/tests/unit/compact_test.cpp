#include <gtest/gtest.h>

#include "mincut/cactus.hpp"
#include "mincut/compact.hpp"
#include "mincut/enumerate.hpp"
#include "mincut/generators.hpp"
#include "mincut/oracle.hpp"

namespace mincut {
namespace {

oracle::MinCuts truth_for(const MultiGraph& g) {
  return g.num_vertices() <= oracle::kDefaultLimit ? oracle::enumerate_min_cuts_bruteforce(g)
                                                   : oracle::enumerate_min_cuts_maxflow(g);
}

Cactus full_cactus(const MultiGraph& g) {
  return build_cactus(g, truth_for(g).cuts);
}

TEST(CompactCactus, CliqueCollapsesToOneNode) {
  CompactionStats stats;
  const Cactus k = compact_cactus(full_cactus(clique(4)), &stats);
  EXPECT_EQ(k.num_nodes(), 1u);
  EXPECT_TRUE(k.cycles().empty());
  EXPECT_EQ(stats.rule_i, 4u);
  EXPECT_EQ(k.preimage_size(0), 4u);
}

TEST(CompactCactus, CycleIsUnchanged) {
  const Cactus before = full_cactus(cycle_graph(4));
  CompactionStats stats;
  const Cactus after = compact_cactus(before, &stats);
  EXPECT_EQ(after.cycles(), before.cycles());
  EXPECT_EQ(after.phi(), before.phi());
  EXPECT_EQ(stats.rule_i + stats.rule_ii + stats.rule_iii + stats.rule_iv, 0u);
}

TEST(CompactCactus, TightnessTriangleIsUnchanged) {
  const Cactus k = compact_cactus(full_cactus(tightness_graph(27, 8, 4)));
  EXPECT_EQ(k.num_nodes(), 3u);
  ASSERT_EQ(k.cycles().size(), 1u);
  EXPECT_EQ(k.cycles()[0].size(), 3u);
  const auto audit = audit_bounds(k, 27, 8);
  EXPECT_EQ(audit.vertices, 3u);
  EXPECT_EQ(audit.bound_floor, 101u);
  EXPECT_TRUE(audit.pass);
}

TEST(CompactCactus, TriangleWithSingletonSplits) {
  // Node 0 is a 1-junction singleton on a triangle; nodes 1 and 2 hold two each.
  const Cactus k(3, {{0, 1, 2}}, {0, 1, 1, 2, 2});
  CompactionStats stats;
  const Cactus out = compact_cactus(k, &stats);
  EXPECT_EQ(stats.rule_ii, 1u);
  EXPECT_EQ(out.num_nodes(), 3u);
  ASSERT_EQ(out.cycles().size(), 2u);
  for (const auto& cyc : out.cycles()) EXPECT_EQ(cyc.size(), 2u);
  EXPECT_EQ(out.junction_degree(out.phi()[0]), 2u);
  EXPECT_EQ(compaction_patterns(out).total(), 0u);
}

TEST(CompactCactus, TwoCycleAtEmptyTwoJunctionContracts) {
  // Empty node 1 sits on a 2-cycle to node 0 and a triangle 1-2-3.
  const Cactus k(4, {{0, 1}, {1, 2, 3}}, {0, 0, 2, 2, 3, 3});
  CompactionStats stats;
  const Cactus out = compact_cactus(k, &stats);
  EXPECT_EQ(stats.rule_iii, 1u);
  EXPECT_EQ(out.num_nodes(), 3u);
  ASSERT_EQ(out.cycles().size(), 1u);
  EXPECT_EQ(out.cycles()[0].size(), 3u);
}

TEST(CompactCactus, TriangleWithTwoEmptyJunctionsShrinks) {
  // Triangle 0-1-2 with empty nodes 1 and 2, each also on a triangle of
  // non-empty nodes.
  const Cactus k(7, {{0, 1, 2}, {1, 3, 4}, {2, 5, 6}}, {0, 0, 3, 3, 4, 4, 5, 5, 6, 6});
  CompactionStats stats;
  const Cactus out = compact_cactus(k, &stats);
  EXPECT_EQ(stats.rule_iv, 1u);
  EXPECT_EQ(out.num_nodes(), 6u);
  EXPECT_EQ(out.cycles().size(), 3u);
  EXPECT_EQ(compaction_patterns(out).total(), 0u);
}

TEST(CompactCactus, RuleCountsShrinkTheCactus) {
  const Cactus k = full_cactus(clique(6));
  CompactionStats stats;
  const Cactus out = compact_cactus(k, &stats);
  EXPECT_EQ(k.num_nodes() - out.num_nodes(), stats.rule_i + stats.rule_iii + stats.rule_iv);
}

TEST(Xylem, Examples) {
  const Xylem ring = build_xylem(Cactus(4, {{0, 1, 2, 3}}, {0, 1, 2, 3}));
  EXPECT_EQ(ring.num_centers, 1u);
  EXPECT_EQ(ring.leaves().size(), 4u);
  EXPECT_EQ(ring.degree(4), 4u);
  EXPECT_TRUE(ring.is_tree());

  const Xylem path = build_xylem(Cactus(3, {{0, 1}, {1, 2}}, {0, 1, 2}));
  EXPECT_EQ(path.size(), 5u);
  EXPECT_EQ(path.leaves(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(path.degree(1), 2u);

  const Xylem star = build_xylem(full_cactus(clique(4)));
  EXPECT_EQ(star.num_centers, 4u);
  EXPECT_EQ(star.leaves().size(), 4u);
  EXPECT_TRUE(star.is_tree());
}

TEST(Xylem, LeavesAreOneJunctionNodes) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const MultiGraph g = random_connected(10, 0.25, seed);
    const Analysis a = analyze(g);
    for (const Cactus* k : {&a.cactus, &a.compact}) {
      const Xylem x = build_xylem(*k);
      EXPECT_TRUE(x.is_tree());
      std::vector<std::size_t> expected;
      for (Node v = 0; v < k->num_nodes(); ++v)
        if (k->junction_degree(v) == 1) expected.push_back(v);
      EXPECT_EQ(x.leaves(), expected) << "seed " << seed;
    }
  }
}

TEST(PruneXylem, Examples) {
  const Cactus tri = compact_cactus(full_cactus(tightness_graph(27, 8, 4)));
  const Xylem x = build_xylem(tri);
  EXPECT_EQ(prune_xylem(x, tri).num_present(), x.num_present());

  const Cactus ring(4, {{0, 1, 2, 3}}, {0, 1, 2, 3});
  const Xylem pruned = prune_xylem(build_xylem(ring), ring);
  EXPECT_EQ(pruned.num_present(), 1u);
  EXPECT_TRUE(pruned.present[4]);
  EXPECT_TRUE(pruned.leaves().empty());
}

TEST(LeanPaths, CountsDegreeTwoRuns) {
  // Chain of three triangles: the two shared nodes are the only degree-2
  // nodes, and a center separates them.
  const Cactus chain(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}, {0, 0, 1, 1, 2, 3, 3, 4, 5, 5, 6, 6});
  const Xylem pruned = prune_xylem(build_xylem(chain), chain);
  const auto lean = lean_paths(pruned);
  EXPECT_EQ(lean.count, 2u);
  EXPECT_EQ(lean.max_length, 1u);
  EXPECT_EQ(lean.total_nodes, 2u);
}

TEST(CheckMinimal, Examples) {
  const MultiGraph t = tightness_graph(27, 8, 4);
  const auto truth = oracle::enumerate_min_cuts_maxflow(t);
  const Cactus tri = compact_cactus(build_cactus(t, truth.cuts));
  const auto report = check_minimal(t, tri, oracle::non_trivial(truth.cuts, 27));
  EXPECT_TRUE(report.minimal);

  const MultiGraph k4 = clique(4);
  EXPECT_TRUE(check_minimal(k4, compact_cactus(full_cactus(k4)), {}).minimal);
  const auto loose = check_minimal(k4, full_cactus(k4), {});
  EXPECT_FALSE(loose.minimal);
  EXPECT_EQ(loose.redundant_edges.size(), 8u);
}

TEST(ContractCactusEdge, ShrinksCycleOrRemovesTwoCycle) {
  const Cactus k(4, {{0, 1, 2}, {2, 3}}, {0, 1, 2, 3});
  const Cactus a = contract_cactus_edge(k, 0, 0);
  EXPECT_EQ(a.num_nodes(), 3u);
  EXPECT_EQ(a.cycles()[0].size(), 2u);
  const Cactus b = contract_cactus_edge(k, 1, 0);
  EXPECT_EQ(b.num_nodes(), 3u);
  EXPECT_EQ(b.cycles().size(), 1u);
  EXPECT_EQ(b.phi(), (std::vector<Node>{0, 1, 2, 2}));
}

TEST(CompactionSandwich, RandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const std::size_t n = 5 + seed % 8;
    const MultiGraph g = random_connected(n, 0.2 + 0.004 * static_cast<double>(seed), seed * 17);
    const auto truth = oracle::enumerate_min_cuts_bruteforce(g);
    const auto nc = oracle::non_trivial(truth.cuts, n);
    const Cactus k = compact_cactus(build_cactus(g, truth.cuts));
    const auto rep = represented_cuts(g, k);
    for (const Cut& c : nc) EXPECT_TRUE(std::binary_search(rep.begin(), rep.end(), c)) << "seed " << seed;
    for (const Cut& c : rep) EXPECT_TRUE(std::binary_search(truth.cuts.begin(), truth.cuts.end(), c));
    EXPECT_TRUE(check_minimal(g, k, nc).minimal) << "seed " << seed;
    EXPECT_EQ(compaction_patterns(k).total(), 0u);
    EXPECT_TRUE(audit_bounds(k, n, min_degree(g)).pass);
  }
}

TEST(StructuralLemmas, HoldForMinDegreeAtLeastThree) {
  std::size_t tested = 0;
  for (std::uint64_t seed = 1; tested < 60 && seed < 2000; ++seed) {
    const MultiGraph g = random_connected(12, 0.3, seed);
    if (min_degree(g) < 3) continue;
    ++tested;
    const Analysis a = analyze(g);
    EXPECT_TRUE(check_singleton_spacing(a.compact).empty()) << "seed " << seed;
    EXPECT_TRUE(check_pruned_leaves(a.compact, a.delta).empty()) << "seed " << seed;
    EXPECT_TRUE(check_cycle_edge_distribution(g, a.compact, a.lambda).empty()) << "seed " << seed;
  }
  EXPECT_EQ(tested, 60u);
}

TEST(StructuralLemmas, SingletonSpacingCanFailAtMinDegreeTwo) {
  // On a plain cycle every node is a 1-junction singleton.
  const Analysis a = analyze(cycle_graph(6));
  EXPECT_FALSE(check_singleton_spacing(a.compact).empty());
}

}  // namespace
}  // namespace mincut
