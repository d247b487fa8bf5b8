#include <gtest/gtest.h>

#include "mincut/generators.hpp"
#include "mincut/oracle.hpp"

namespace mincut {
namespace {

std::vector<std::vector<Vertex>> sides(const std::vector<Cut>& cuts) {
  std::vector<std::vector<Vertex>> out;
  for (const Cut& c : cuts) out.push_back(c.side);
  return out;
}

TEST(BruteForceOracle, CycleOfFour) {
  const auto r = oracle::enumerate_min_cuts_bruteforce(cycle_graph(4));
  EXPECT_EQ(r.lambda, 2u);
  const std::vector<std::vector<Vertex>> expected{{1}, {1, 2}, {1, 2, 3}, {2}, {2, 3}, {3}};
  EXPECT_EQ(sides(r.cuts), expected);
}

TEST(BruteForceOracle, CliqueHasOnlyTrivialCuts) {
  const auto r = oracle::enumerate_min_cuts_bruteforce(clique(4));
  EXPECT_EQ(r.lambda, 3u);
  const std::vector<std::vector<Vertex>> expected{{1}, {1, 2, 3}, {2}, {3}};
  EXPECT_EQ(sides(r.cuts), expected);
}

TEST(BruteForceOracle, TightnessFixture) {
  const MultiGraph g = tightness_graph(27, 8, 4);
  const auto r = oracle::enumerate_min_cuts_bruteforce(g, 27);
  EXPECT_EQ(r.lambda, 4u);
  std::vector<Vertex> second, third, both;
  for (Vertex v = 9; v < 18; ++v) second.push_back(v);
  for (Vertex v = 18; v < 27; ++v) third.push_back(v);
  for (Vertex v = 9; v < 27; ++v) both.push_back(v);
  const std::vector<std::vector<Vertex>> expected{second, both, third};
  EXPECT_EQ(sides(r.cuts), expected);
}

TEST(BruteForceOracle, EveryCutHasLambdaCrossingEdges) {
  const MultiGraph g = random_connected(11, 0.3, 12);
  const auto r = oracle::enumerate_min_cuts_bruteforce(g);
  ASSERT_FALSE(r.cuts.empty());
  for (const Cut& c : r.cuts) {
    EXPECT_EQ(crossing_edges(g, c.side).edges.size(), r.lambda);
    EXPECT_EQ(c.size, r.lambda);
    EXPECT_FALSE(std::binary_search(c.side.begin(), c.side.end(), Vertex{0}));
  }
  EXPECT_TRUE(std::adjacent_find(r.cuts.begin(), r.cuts.end()) == r.cuts.end());
}

TEST(BruteForceOracle, Preconditions) {
  EXPECT_THROW(oracle::enumerate_min_cuts_bruteforce(disjoint_cliques(12, 3)), std::invalid_argument);
  EXPECT_THROW(oracle::enumerate_min_cuts_bruteforce(cycle_graph(25)), std::invalid_argument);
  EXPECT_NO_THROW(oracle::enumerate_min_cuts_bruteforce(cycle_graph(25), 25));
  EXPECT_THROW(oracle::enumerate_min_cuts_bruteforce(MultiGraph(1)), std::invalid_argument);
}

TEST(CountMinCuts, SplitsTrivialAndNonTrivial) {
  const auto c4 = oracle::count_min_cuts(cycle_graph(4));
  EXPECT_EQ(c4.total, 6u);
  EXPECT_EQ(c4.trivial, 4u);
  EXPECT_EQ(c4.non_trivial, 2u);
  const auto k4 = oracle::count_min_cuts(clique(4));
  EXPECT_EQ(k4.total, 4u);
  EXPECT_EQ(k4.trivial, 4u);
  EXPECT_EQ(k4.non_trivial, 0u);
  EXPECT_THROW(oracle::count_min_cuts(disjoint_cliques(12, 3)), std::invalid_argument);
}

TEST(MaxFlowOracle, AgreesWithBruteForce) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const std::size_t n = 2 + seed % 12;
    const MultiGraph g = random_connected(n, 0.15 + 0.008 * static_cast<double>(seed), seed * 7);
    const auto a = oracle::enumerate_min_cuts_bruteforce(g);
    const auto b = oracle::enumerate_min_cuts_maxflow(g);
    EXPECT_EQ(a.lambda, b.lambda) << "seed " << seed;
    EXPECT_EQ(a.cuts, b.cuts) << "seed " << seed;
  }
}

TEST(MaxFlowOracle, MediumTightnessCounts) {
  const auto r = oracle::enumerate_min_cuts_maxflow(tightness_graph(36, 8, 4));
  EXPECT_EQ(r.lambda, 4u);
  EXPECT_EQ(r.cuts.size(), 6u);
  EXPECT_THROW(oracle::enumerate_min_cuts_maxflow(cycle_graph(65)), std::invalid_argument);
}

}  // namespace
}  // namespace mincut
