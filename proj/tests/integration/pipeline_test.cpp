#include <gtest/gtest.h>

#include <algorithm>

#include "mincut/cactus.hpp"
#include "mincut/compact.hpp"
#include "mincut/enumerate.hpp"
#include "mincut/generators.hpp"
#include "mincut/oracle.hpp"
#include "mincut/sparsify.hpp"

namespace mincut {
namespace {

// Every stage checked against the max-flow oracle on graphs beyond brute force.
TEST(Pipeline, MediumRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 21 + seed % 40;
    const MultiGraph g = random_connected(n, 2.5 / static_cast<double>(n) + 0.002 * static_cast<double>(seed), seed);
    SCOPED_TRACE("seed " + std::to_string(seed));
    const auto truth = oracle::enumerate_min_cuts_maxflow(g);
    Analysis a = analyze(g);
    ASSERT_EQ(a.lambda, truth.lambda);
    EXPECT_TRUE(validate_cactus(g, a.cactus, truth.cuts).ok());
    const auto nc = oracle::non_trivial(truth.cuts, n);
    const auto rep = represented_cuts(g, a.compact);
    for (const Cut& c : nc) EXPECT_TRUE(std::binary_search(rep.begin(), rep.end(), c));
    EXPECT_TRUE(audit_bounds(a.compact, n, a.delta).pass);
    EXPECT_TRUE(verify_sparsifier(g, a.sparsifier.graph, a.sparsifier.vertex_map, nc, a.lambda).ok());
    std::vector<Cut> listed;
    enumerate_min_cuts(g, a, [&](const EdgeCut& c) { listed.push_back(make_cut(g, side_of_edge_cut(g, c))); });
    std::sort(listed.begin(), listed.end());
    EXPECT_EQ(listed, truth.cuts);
  }
}

TEST(Pipeline, CactusTextRoundTrip) {
  const MultiGraph g = tightness_graph(45, 8, 4);
  const Analysis a = analyze(g);
  for (const Cactus* k : {&a.cactus, &a.compact}) {
    const Cactus back = parse_cactus(format_cactus(*k));
    EXPECT_EQ(represented_cuts(g, back), represented_cuts(g, *k));
  }
}

TEST(Pipeline, TightnessFamilyCounts) {
  for (std::size_t r : {3u, 6u, 10u, 25u}) {
    for (auto [delta, lambda] : {std::pair<std::size_t, std::size_t>{8, 4}, {12, 6}, {20, 2}}) {
      const MultiGraph g = tightness_graph(r * (delta + 1), delta, lambda);
      Analysis a = analyze(g);
      const auto summary = enumerate_min_cuts(g, a, [](const EdgeCut&) {});
      EXPECT_EQ(summary.total, r * (r - 1) / 2);
      EXPECT_EQ(a.compact.num_nodes(), r);
      EXPECT_EQ(a.sparsifier.graph.num_edges(), r * lambda / 2);
    }
  }
}

}  // namespace
}  // namespace mincut
