#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mincut {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  EdgeId id;
};

struct Incidence {
  Vertex neighbor;
  std::uint32_t edge_index;  // position in MultiGraph::edges()
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Undirected loop-free multigraph on vertices 0..n-1.
///
/// Parallel edges are stored as repeated entries. Every edge carries an id
/// that survives contraction, so an edge of a contracted graph can always be
/// traced back to the edge of the input graph it came from. Immutable once
/// built.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t n) : MultiGraph(n, std::vector<Edge>{}) {}
  MultiGraph(std::size_t n, std::vector<Edge> edges);

  /// Edge ids are assigned 0..m-1 in input order.
  static MultiGraph from_pairs(std::size_t n,
                               const std::vector<std::pair<Vertex, Vertex>>& pairs);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }
  /// Edge carrying the given id; throws std::out_of_range if absent.
  const Edge& edge_by_id(EdgeId id) const;

  std::span<const Incidence> incident(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool is_simple() const;
  bool is_connected() const;
  /// Component label per vertex, labels 0..k-1 in order of first vertex.
  std::vector<Vertex> components(std::size_t* count = nullptr) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
  std::vector<std::pair<EdgeId, std::uint32_t>> id_index_;  // empty when id == index
};

/// A cut stored by its canonical side: the side that does not contain vertex 0.
struct Cut {
  std::vector<Vertex> side;  // sorted
  std::size_t size = 0;

  bool trivial(std::size_t n) const { return side.size() == 1 || side.size() + 1 == n; }
  friend bool operator==(const Cut& a, const Cut& b) { return a.side == b.side; }
  friend bool operator<(const Cut& a, const Cut& b) { return a.side < b.side; }
};

/// Crossing edge ids of a cut, sorted.
struct EdgeCut {
  std::vector<EdgeId> edges;
  friend bool operator==(const EdgeCut&, const EdgeCut&) = default;
};

struct ParseOptions {
  bool simple = true;
  bool require_connected = false;
};

MultiGraph parse_graph(std::string_view text, const ParseOptions& options = {});
std::string format_graph(const MultiGraph& g);

struct Contraction {
  MultiGraph graph;
  std::vector<Vertex> vertex_map;  // old vertex -> new vertex
};

/// Contracts every block of a partition of V(g) into one vertex. Block i
/// becomes vertex i; self-loops vanish, parallel edges and edge ids are kept.
Contraction contract(const MultiGraph& g, const std::vector<std::vector<Vertex>>& blocks);

/// Same as contract() but driven by a labelling. Labels may leave some of
/// 0..num_blocks-1 unused, which yields isolated vertices.
Contraction contract_by_map(const MultiGraph& g, std::span<const Vertex> label,
                            std::size_t num_blocks);

std::size_t cut_size(const MultiGraph& g, std::span<const Vertex> side);
EdgeCut crossing_edges(const MultiGraph& g, std::span<const Vertex> side);
std::size_t min_degree(const MultiGraph& g);

/// Canonical cut (side without vertex 0) of the bipartition {side, V - side}.
Cut make_cut(const MultiGraph& g, std::span<const Vertex> side);
std::vector<Vertex> canonical_side(std::size_t n, std::span<const Vertex> side);

/// `c <k> <u1>-<v1> ...` with u < v per token and tokens in ascending order.
std::string format_edge_cut(const MultiGraph& g, const EdgeCut& cut);

/// Side of the bipartition obtained by deleting the cut edges, or empty when
/// the deletion does not leave exactly two components.
std::vector<Vertex> side_of_edge_cut(const MultiGraph& g, const EdgeCut& cut);

}  // namespace mincut
