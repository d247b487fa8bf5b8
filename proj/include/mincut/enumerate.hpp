#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mincut/cactus.hpp"
#include "mincut/compact.hpp"
#include "mincut/connectivity.hpp"
#include "mincut/graph.hpp"
#include "mincut/sparsify.hpp"

namespace mincut {

/// Directed acyclic graph whose closed sets (contain s, miss t, closed under
/// successors; arc u->v makes v a successor of u) stand for min-cuts.
struct CutDag {
  static constexpr Vertex kNoVertex = ~Vertex{0};

  struct EmbeddedArc {
    Vertex from = 0;
    Vertex to = 0;
    EdgeId edge = 0;  // id of the graph edge this arc carries
  };

  std::size_t num_vertices = 0;
  Vertex s = 0;
  Vertex t = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs;
  /// Node of the compact cactus -> DAG vertex, or kNoVertex for empty nodes
  /// that carry no graph vertex.
  std::vector<Vertex> rho;
  std::vector<EmbeddedArc> embedded;
};

class EmbeddingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One two-vertex DAG per 2-cycle of k1; its single closed set {s} is the
/// side of the 2-cycle not containing the first listed node.
std::vector<CutDag> build_d1(const Cactus& k1);

struct TwoCycleContraction {
  Cactus cactus;               // K2, without 2-cycles
  std::vector<Node> node_map;  // K1 node -> K2 node
};
TwoCycleContraction contract_2cycles(const Cactus& k1);

/// DAGs covering every min-cut of K2 whose preimage is a proper cut, each
/// such graph cut exactly once. Prefixes of a breadth-first order of the
/// non-empty K2 nodes are contracted into s in turn; the next node is t and the
/// residual graph of a maximum s-t flow, condensed and stripped of empty
/// components, is the DAG. rho is expressed over K1 through node_map.
std::vector<CutDag> build_d2(const Cactus& k2, const std::vector<Node>& node_map,
                             const std::vector<std::size_t>& k1_preimage_sizes);

/// Replaces the arcs' role by the edges of h (vertex x of h is K1 node x):
/// each edge whose ends land on different DAG vertices becomes an arc from the
/// end that reaches the other. Throws EmbeddingError on incomparable ends.
CutDag embed_edges(const CutDag& a, const MultiGraph& h);

/// Every closed set as a membership vector, over the structural arcs or over
/// the embedded ones.
std::vector<std::vector<char>> list_closed_sets(const CutDag& a, bool use_embedded);

using CutSink = std::function<void(const EdgeCut&)>;

/// Streams the crossing edges of each closed set of the embedded DAG,
/// maintained incrementally as the search adds and removes vertices. Returns
/// the number of closed sets.
std::size_t enumerate_closed_sets(const CutDag& embedded, const CutSink& sink);

struct PhaseTimings {
  double certificate = 0, connectivity = 0, reduction = 0, family = 0, cactus = 0;
  double compact = 0, sparsify = 0, dags = 0, embed = 0, enumerate = 0, trivial = 0;
  double post_cactus() const { return compact + sparsify + dags + embed + enumerate + trivial; }
};

/// Everything computed up to the sparsifier.
struct Analysis {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t delta = 0;
  std::size_t lambda = 0;
  ReducedGraph reduced;
  std::vector<Cut> reduced_cuts;  // all min-cuts of reduced.graph
  Cactus cactus;                  // represents all min-cuts of G
  Cactus compact;                 // compact cactus for the non-trivial min-cuts
  CompactionStats compaction;
  Sparsifier sparsifier;
  PhaseTimings timings;
};

/// Runs certificate, connectivity, min-cut family, cactus, compaction and
/// sparsifier. Throws std::invalid_argument on disconnected input or n < 2.
Analysis analyze(const MultiGraph& g);

/// All min-cuts of g as canonical sides (lifted from the reduced graph).
std::vector<Cut> all_min_cuts(const MultiGraph& g, const Analysis& a);

struct EnumerationOptions {
  unsigned threads = 1;
};

struct EnumerationSummary {
  std::size_t total = 0;
  std::size_t trivial = 0;
  std::size_t non_trivial = 0;
  std::size_t d1_dags = 0;
  std::size_t d2_dags = 0;
};

/// Lists every min-cut of g once, as its crossing edges: closed sets of the
/// embedded DAGs first, then the trivial cuts not met before. Output order
/// does not depend on the thread count.
EnumerationSummary enumerate_min_cuts(const MultiGraph& g, Analysis& a, const CutSink& sink,
                                      const EnumerationOptions& options = {});

EnumerationSummary enumerate_all_min_cuts(const MultiGraph& g, const CutSink& sink,
                                          const EnumerationOptions& options = {});

}  // namespace mincut
