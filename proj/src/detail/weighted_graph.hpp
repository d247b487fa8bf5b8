#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut::detail {

/// Simple graph with integer edge weights in CSR form; parallel edges merged.
struct WeightedGraph {
  struct Arc {
    Vertex to;
    std::uint64_t weight;
  };
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
  std::vector<Arc> arcs;

  static WeightedGraph from_multigraph(const MultiGraph& g);
  /// Quotient by a labelling with values 0..count-1.
  WeightedGraph quotient(std::span<const Vertex> label, std::size_t count) const;

  std::span<const Arc> neighbors(Vertex v) const {
    return {arcs.data() + offsets[v], arcs.data() + offsets[v + 1]};
  }
  std::uint64_t weighted_degree(Vertex v) const;
  std::uint64_t min_weighted_degree() const;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  Vertex find(Vertex v);
  bool unite(Vertex a, Vertex b);
  /// Dense labels 0..count-1 in order of smallest member.
  std::vector<Vertex> labels(std::size_t* count);

 private:
  std::vector<Vertex> parent_;
};

/// One maximum-adjacency round. Every edge xy whose attachment value q(xy)
/// reaches `threshold` is merged in `uf` (lambda(x, y) >= q(xy)). Returns the
/// number of merges.
std::size_t ma_contraction_round(const WeightedGraph& g, std::uint64_t threshold, UnionFind& uf);

}  // namespace mincut::detail
