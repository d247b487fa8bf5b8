#pragma once

#include <cstddef>
#include <cstdint>

#include "mincut/graph.hpp"

namespace mincut {

/// r = n/(delta+1) cliques K_{delta+1} on consecutive vertex blocks, joined by
/// lambda/2 vertex-disjoint rings: vertex j of clique i is adjacent to vertex j
/// of clique i+1 (mod r) for j < lambda/2. Requires n >= 3(delta+1),
/// (delta+1) | n, delta >= 2, lambda even, 2 <= lambda <= delta/2.
MultiGraph tightness_graph(std::size_t n, std::size_t delta, std::size_t lambda);

/// n/(delta+1) disjoint cliques K_{delta+1}.
MultiGraph disjoint_cliques(std::size_t n, std::size_t delta);

MultiGraph cycle_graph(std::size_t n);
MultiGraph clique(std::size_t k);

/// Uniform random spanning tree-like backbone (each vertex attaches to an
/// earlier one in a shuffled order) plus every other pair with probability p.
/// Deterministic for a given seed on every platform.
MultiGraph random_connected(std::size_t n, double p, std::uint64_t seed);

}  // namespace mincut
