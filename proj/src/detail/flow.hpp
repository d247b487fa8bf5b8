#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut::detail {

/// Residual network with integer capacities; augmenting paths by BFS.
class FlowNetwork {
 public:
  static constexpr std::uint64_t kInfinite = ~std::uint64_t{0} >> 2;

  explicit FlowNetwork(std::size_t n) : head_(n, kNone) {}

  std::size_t num_vertices() const { return head_.size(); }
  void add_edge(Vertex u, Vertex v, std::uint64_t cap_uv, std::uint64_t cap_vu);

  /// Augments from s to t until the flow value reaches `limit` or no path is
  /// left. Returns the flow value.
  std::uint64_t max_flow(Vertex s, Vertex t, std::uint64_t limit);

  /// Arcs u->v with positive residual capacity, one entry per arc.
  std::vector<std::pair<Vertex, Vertex>> residual_arcs() const;

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};
  struct Arc {
    Vertex to;
    std::uint64_t residual;
    std::uint32_t next;
  };
  std::vector<std::uint32_t> head_;
  std::vector<Arc> arcs_;  // arc i and i^1 are mutual reverses
};

struct Condensation {
  std::vector<Vertex> component;  // vertex -> strongly connected component
  std::size_t count = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs;  // between components, multiplicity kept
};

/// Strongly connected components (iterative Tarjan); component ids follow a
/// topological order of the condensation (sources first).
Condensation condense(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs);

}  // namespace mincut::detail
