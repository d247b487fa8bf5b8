#pragma once

#include <cstddef>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

/// Ground truth for every other module: plain enumeration, no shared code
/// with the cactus pipeline.
namespace oracle {

inline constexpr std::size_t kDefaultLimit = 20;
inline constexpr std::size_t kFlowLimit = 64;

struct MinCuts {
  std::size_t lambda = 0;
  std::vector<Cut> cuts;  // sorted canonical sides
};

/// Scans all 2^(n-1) bipartitions. Throws when n exceeds `limit`, n < 2 or g is
/// disconnected.
MinCuts enumerate_min_cuts_bruteforce(const MultiGraph& g, std::size_t limit = kDefaultLimit);

/// Max-flow from vertex 0 to every other vertex on a dense capacity matrix;
/// collects every minimum 0-v cut of global minimum value. n <= 64.
MinCuts enumerate_min_cuts_maxflow(const MultiGraph& g);

struct CutCounts {
  std::size_t total = 0;
  std::size_t trivial = 0;
  std::size_t non_trivial = 0;
};

CutCounts count_min_cuts(const MultiGraph& g, std::size_t limit = kDefaultLimit);

/// Non-trivial members of a min-cut list.
std::vector<Cut> non_trivial(const std::vector<Cut>& cuts, std::size_t n);

}  // namespace oracle
}  // namespace mincut
