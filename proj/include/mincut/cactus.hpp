#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

using Node = std::uint32_t;

class CactusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CactusVertexClass {
  bool is_empty = false;
  bool is_singleton = false;
  std::size_t junction_degree = 0;
};

/// Cactus representation (K, phi) of a graph.
///
/// K is stored by its cycle list: every cycle is a cyclic node sequence of
/// length >= 2, a 2-cycle standing for a pair of parallel edges. The cycles
/// partition E(K) and are exactly its blocks. phi maps every graph vertex to a
/// cactus node; nodes with empty preimage are allowed.
class Cactus {
 public:
  Cactus() = default;
  /// Throws CactusError unless the cycles form a connected cactus on
  /// 0..num_nodes-1 and phi is total.
  Cactus(std::size_t num_nodes, std::vector<std::vector<Node>> cycles, std::vector<Node> phi);

  /// Recovers the cycle list from a multigraph by block decomposition. Throws
  /// CactusError if K is not a cactus.
  static Cactus from_graph(const MultiGraph& k, std::vector<Node> phi);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_graph_vertices() const { return phi_.size(); }
  const std::vector<std::vector<Node>>& cycles() const { return cycles_; }
  const std::vector<Node>& phi() const { return phi_; }
  const std::vector<std::size_t>& cycles_of(Node v) const { return node_cycles_[v]; }

  std::size_t junction_degree(Node v) const { return node_cycles_[v].size(); }
  std::size_t preimage_size(Node v) const { return preimage_size_[v]; }
  bool is_empty(Node v) const { return preimage_size_[v] == 0; }
  bool is_singleton(Node v) const { return preimage_size_[v] == 1; }
  CactusVertexClass classify(Node v) const {
    return {is_empty(v), is_singleton(v), junction_degree(v)};
  }

  std::vector<std::vector<Vertex>> preimages() const;
  /// The cactus as a multigraph; edge i of cycle c is (c[i], c[i+1 mod k]).
  MultiGraph graph() const;
  std::size_t num_edges() const;

  /// Same cactus with phi replaced by phi o map (map: new vertex -> old vertex).
  Cactus pull_back(const std::vector<Vertex>& map) const;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<std::vector<Node>> cycles_;
  std::vector<Node> phi_;
  std::vector<std::vector<std::size_t>> node_cycles_;
  std::vector<std::size_t> preimage_size_;
};

/// Nodes of the component of K - e - f containing v, where e and f are the two
/// edges of cycle `cycle` at v. Sorted. Throws std::invalid_argument if v is
/// not on the cycle.
std::vector<Node> side_of_cycle(const Cactus& kc, std::size_t cycle, Node v);

struct CactusCut {
  std::size_t cycle = 0;
  std::size_t first_edge = 0;   // edges are positions on the cycle, first < second
  std::size_t second_edge = 0;
  std::vector<Node> nodes;      // side cut off, canonical: never contains node phi(0)
};

/// Every min-cut of K: one per unordered pair of edges on a common cycle.
std::vector<CactusCut> min_cuts_of_cactus(const Cactus& kc);

/// Canonical graph cut side phi^{-1}(nodes); empty when the preimage is empty
/// or everything.
std::vector<Vertex> lift_side(const Cactus& kc, const std::vector<Node>& nodes);

/// Cactus representation for all min-cuts, assembled from the complete list of
/// min-cuts of g (crossing classes -> circular partitions -> laminar nesting).
/// Throws CactusError when the cuts do not form a consistent min-cut family.
Cactus build_cactus(const MultiGraph& g, const std::vector<Cut>& cuts);

struct CactusValidation {
  bool is_cactus = true;
  std::string structure_error;
  std::vector<Cut> missing;                   // members of S with no cactus cut
  std::vector<std::vector<Vertex>> extra;     // cactus cuts that are no min-cut of G
  bool ok() const { return is_cactus && missing.empty() && extra.empty(); }
};

/// Checks both representation clauses: each cut of S is phi^{-1} of a min-cut
/// of K, and phi^{-1} of every min-cut of K is a min-cut of G.
CactusValidation validate_cactus(const MultiGraph& g, const Cactus& kc, const std::vector<Cut>& s);
/// Overload for a raw multigraph K (structure checked first).
CactusValidation validate_cactus(const MultiGraph& g, const MultiGraph& k, const std::vector<Node>& phi,
                                 const std::vector<Cut>& s);

/// Canonical graph cuts represented by the cactus (deduplicated, sorted).
std::vector<Cut> represented_cuts(const MultiGraph& g, const Cactus& kc);

/// `cactus <|V(K)|> <#cycles>`, `y <k> <v1> ... <vk>` per cycle, `map <g> <k>`.
std::string format_cactus(const Cactus& kc);
Cactus parse_cactus(std::string_view text);

}  // namespace mincut
