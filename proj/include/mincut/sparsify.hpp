#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mincut/cactus.hpp"
#include "mincut/graph.hpp"

namespace mincut {

struct Sparsifier {
  MultiGraph graph;                // H; vertex x is the preimage of cactus node x
  std::vector<Vertex> vertex_map;  // G vertex -> H vertex (equals phi)
};

/// Contracts every preimage of the compact cactus into one vertex. Empty
/// cactus nodes become isolated vertices so that |V(H)| = |V(K')|. Edge ids of
/// g are kept.
Sparsifier sparsify(const MultiGraph& g, const Cactus& kprime);

struct SparsifierReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t edge_bound = 0;  // lambda * (|V(H)| - 1)
  bool edge_bound_ok = false;
  std::vector<std::string> violations;  // cuts split by a block or resized in H
  bool ok() const { return edge_bound_ok && violations.empty(); }
};

/// Checks that each cut of `cuts` (normally the non-trivial min-cuts of g) is a
/// union of blocks and keeps size lambda in H, and the edge bound.
SparsifierReport verify_sparsifier(const MultiGraph& g, const MultiGraph& h, const std::vector<Vertex>& vertex_map,
                                   const std::vector<Cut>& cuts, std::size_t lambda);

}  // namespace mincut
