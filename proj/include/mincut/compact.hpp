#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mincut/cactus.hpp"
#include "mincut/graph.hpp"

namespace mincut {

struct CompactionStats {
  std::size_t rule_i = 0;    // 2-cycle with a 1-junction singleton: contracted
  std::size_t rule_ii = 0;   // 3-cycle with a 1-junction singleton: split into two 2-cycles
  std::size_t rule_iii = 0;  // 2-cycle with an empty 2-junction: contracted
  std::size_t rule_iv = 0;   // 3-cycle with two empty 2-junctions: those two merged
};

/// Applies the four compaction rules to a fixed point. The input must represent
/// all min-cuts of g; the result represents a family between the non-trivial
/// min-cuts and all min-cuts, and is minimal for the non-trivial ones.
Cactus compact_cactus(const Cactus& kc, CompactionStats* stats = nullptr);

/// Block tree of a cactus: nodes 0..N-1 are cactus nodes, N..N+C-1 one
/// center per cycle. Pruning marks nodes absent instead of renumbering.
struct Xylem {
  std::size_t num_cactus_nodes = 0;
  std::size_t num_centers = 0;
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<char> present;

  std::size_t size() const { return adjacency.size(); }
  std::size_t num_present() const;
  std::size_t degree(std::size_t x) const;  // among present nodes
  bool is_center(std::size_t x) const { return x >= num_cactus_nodes; }
  std::vector<std::size_t> leaves() const;
  bool is_tree() const;
};

Xylem build_xylem(const Cactus& kc);
/// Removes every 1-junction singleton of kc.
Xylem prune_xylem(const Xylem& x, const Cactus& kc);

struct LeanPathStats {
  std::size_t count = 0;       // maximal paths of degree-2 nodes in the pruned xylem
  std::size_t max_length = 0;  // nodes on the longest one
  std::size_t total_nodes = 0;
};
LeanPathStats lean_paths(const Xylem& pruned);

struct BoundAudit {
  std::size_t vertices = 0;
  std::size_t n = 0;
  std::size_t delta = 0;
  std::size_t bound_floor = 0;  // floor(30n/delta)
  bool pass = false;            // vertices < 30n/delta, compared exactly
  std::size_t xylem_leaves = 0;       // leaves of the pruned xylem
  std::size_t xylem_branching = 0;    // pruned-xylem nodes of degree >= 3
  LeanPathStats lean;
  std::size_t one_junction_singletons = 0;
};
BoundAudit audit_bounds(const Cactus& kprime, std::size_t n, std::size_t delta);

struct MinimalityReport {
  bool minimal = true;
  // Cycle edges (cycle index, edge position) whose contraction keeps every target cut.
  std::vector<std::pair<std::size_t, std::size_t>> redundant_edges;
};
/// Contracts each edge of kc in turn and checks that some cut of `targets`
/// is no longer represented.
MinimalityReport check_minimal(const MultiGraph& g, const Cactus& kc, const std::vector<Cut>& targets);

/// Contracts one cycle edge, merging its endpoints (helper of check_minimal).
Cactus contract_cactus_edge(const Cactus& kc, std::size_t cycle, std::size_t edge);

struct PatternCounts {
  std::size_t two_cycle_singleton = 0;
  std::size_t three_cycle_singleton = 0;
  std::size_t two_cycle_empty_junction = 0;
  std::size_t three_cycle_two_empty = 0;
  std::size_t total() const {
    return two_cycle_singleton + three_cycle_singleton + two_cycle_empty_junction + three_cycle_two_empty;
  }
};
/// Occurrences of the four rule triggers; all zero after compaction.
PatternCounts compaction_patterns(const Cactus& kc);

/// Violations of: adjacent sides of a cycle of length >= 3 share lambda/2 graph
/// edges, non-adjacent sides none.
std::vector<std::string> check_cycle_edge_distribution(const MultiGraph& g, const Cactus& kc, std::size_t lambda);
/// Violations of: every side of every cycle has a non-empty preimage.
std::vector<std::string> check_nonempty_sides(const Cactus& kc);
/// Violations of: no cycle has two adjacent 1-junction singletons.
std::vector<std::string> check_singleton_spacing(const Cactus& kc);
/// Violations of: pruned-xylem leaves are exactly the 1-junction non-singletons,
/// no center is a leaf, and each such leaf holds at least delta vertices.
std::vector<std::string> check_pruned_leaves(const Cactus& kc, std::size_t delta);

}  // namespace mincut
