#pragma once

#include <cstddef>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

struct MaOrdering {
  std::vector<Vertex> order;
  /// attachment[i]: edges from order[i] into {order[0..i-1]} when it was picked.
  std::vector<std::size_t> attachment;
};

/// Maximum-adjacency ordering starting at `start`. Throws on disconnected input.
MaOrdering ma_ordering(const MultiGraph& g, Vertex start);

/// Edge connectivity of a connected graph with at least two vertices.
/// Matula-style contraction for an upper bound, then Nagamochi-Ibaraki
/// contraction rounds for the exact value.
std::size_t edge_connectivity(const MultiGraph& g);

/// Union of the first k forests of a scan-first forest decomposition. Every cut
/// of size <= k keeps all its edges, larger cuts keep at least k.
MultiGraph sparse_certificate(const MultiGraph& g, std::size_t k);

struct ReducedGraph {
  MultiGraph graph;
  std::vector<Vertex> vertex_map;  // input vertex -> reduced vertex
};

/// Contracts vertex pairs whose local connectivity provably exceeds lambda
/// until a maximum-adjacency round finds none. Min-cuts of the input are
/// exactly the preimages of min-cuts of the result.
ReducedGraph reduce_preserving_min_cuts(const MultiGraph& g, std::size_t lambda);

/// All min-cuts of g (of value lambda), from one minimum s-t cut lattice per
/// prefix of a breadth-first order. Meant for graphs already reduced by
/// reduce_preserving_min_cuts(); output is sorted.
std::vector<Cut> min_cut_family(const MultiGraph& g, std::size_t lambda);

}  // namespace mincut
