#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut::testing {

/// One representative per isomorphism class of connected simple graphs on n
/// vertices (n <= 8), grown from the classes on n-1 vertices.
std::vector<MultiGraph> connected_graphs(std::size_t n);

/// Canonical adjacency string, equal for isomorphic graphs (n <= 8).
std::string canonical_form(const MultiGraph& g);

struct CorpusEntry {
  std::string name;
  MultiGraph graph;
};

/// All connected graphs with 2..max_small vertices, followed by `random_count`
/// seeded random connected graphs with 8..10 vertices.
std::vector<CorpusEntry> oracle_corpus(std::size_t max_small = 7, std::size_t random_count = 500,
                                       std::uint64_t seed = 20240611);

}  // namespace mincut::testing
