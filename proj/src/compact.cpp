#include "mincut/compact.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mincut {

namespace {

// Mutable cactus used while the rules run. Merged nodes keep a parent link so
// phi can be resolved at the end.
class Workspace {
 public:
  explicit Workspace(const Cactus& kc)
      : cycles_(kc.cycles()),
        cycle_alive_(cycles_.size(), 1),
        node_cycles_(kc.num_nodes()),
        preimage_(kc.num_nodes()),
        parent_(kc.num_nodes()),
        alive_(kc.num_nodes(), 1) {
    for (Node v = 0; v < kc.num_nodes(); ++v) {
      node_cycles_[v] = kc.cycles_of(v);
      preimage_[v] = kc.preimage_size(v);
      parent_[v] = v;
    }
  }

  void run(CompactionStats& stats) {
    for (std::size_t c = 0; c < cycles_.size(); ++c) queue_.push_back(c);
    while (!queue_.empty()) {
      const std::size_t c = queue_.front();
      queue_.pop_front();
      if (!cycle_alive_[c]) continue;
      if (cycles_[c].size() == 2) {
        try_two_cycle(c, stats);
      } else if (cycles_[c].size() == 3) {
        try_three_cycle(c, stats);
      }
    }
  }

  Cactus result(const Cactus& original) {
    std::vector<Node> renumber(alive_.size(), 0);
    Node next = 0;
    for (Node v = 0; v < alive_.size(); ++v)
      if (alive_[v]) renumber[v] = next++;
    std::vector<std::vector<Node>> cycles;
    for (std::size_t c = 0; c < cycles_.size(); ++c) {
      if (!cycle_alive_[c]) continue;
      std::vector<Node> cyc;
      for (Node v : cycles_[c]) cyc.push_back(renumber[v]);
      cycles.push_back(std::move(cyc));
    }
    std::vector<Node> phi;
    phi.reserve(original.phi().size());
    for (Node v : original.phi()) phi.push_back(renumber[find(v)]);
    return Cactus(next, std::move(cycles), std::move(phi));
  }

 private:
  bool one_junction_singleton(Node v) const { return node_cycles_[v].size() == 1 && preimage_[v] == 1; }
  bool empty_two_junction(Node v) const { return node_cycles_[v].size() == 2 && preimage_[v] == 0; }

  Node find(Node v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void detach(Node v, std::size_t c) {
    auto& list = node_cycles_[v];
    list.erase(std::find(list.begin(), list.end(), c));
  }

  void kill_cycle(std::size_t c) {
    for (Node v : cycles_[c]) detach(v, c);
    cycle_alive_[c] = 0;
  }

  // Moves everything of `from` onto `into`. The two must no longer share a cycle.
  void merge(Node from, Node into) {
    for (std::size_t c : node_cycles_[from]) {
      std::replace(cycles_[c].begin(), cycles_[c].end(), from, into);
      node_cycles_[into].push_back(c);
    }
    node_cycles_[from].clear();
    preimage_[into] += preimage_[from];
    preimage_[from] = 0;
    parent_[from] = into;
    alive_[from] = 0;
    touch(into);
  }

  void touch(Node v) {
    for (std::size_t c : node_cycles_[v]) queue_.push_back(c);
  }

  void try_two_cycle(std::size_t c, CompactionStats& stats) {
    const Node a = cycles_[c][0], b = cycles_[c][1];
    for (auto [v, other] : {std::pair{a, b}, std::pair{b, a}}) {
      if (one_junction_singleton(v)) {
        kill_cycle(c);
        merge(v, other);
        ++stats.rule_i;
        return;
      }
    }
    for (auto [v, other] : {std::pair{a, b}, std::pair{b, a}}) {
      if (empty_two_junction(v)) {
        kill_cycle(c);
        merge(v, other);
        ++stats.rule_iii;
        return;
      }
    }
  }

  void try_three_cycle(std::size_t c, CompactionStats& stats) {
    const std::vector<Node> cyc = cycles_[c];
    for (std::size_t i = 0; i < 3; ++i) {
      const Node v = cyc[i], a = cyc[(i + 1) % 3], b = cyc[(i + 2) % 3];
      if (!one_junction_singleton(v)) continue;
      // Edge ab goes away; the triangle becomes the 2-cycles {v,a} and {v,b}.
      cycles_[c] = {v, a};
      detach(b, c);
      const std::size_t fresh = cycles_.size();
      cycles_.push_back({v, b});
      cycle_alive_.push_back(1);
      node_cycles_[v].push_back(fresh);
      node_cycles_[b].push_back(fresh);
      ++stats.rule_ii;
      touch(v);
      touch(a);
      touch(b);
      return;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const Node v = cyc[i], w = cyc[(i + 1) % 3];
      if (!empty_two_junction(v) || !empty_two_junction(w)) continue;
      cycles_[c].erase(std::find(cycles_[c].begin(), cycles_[c].end(), w));
      detach(w, c);
      merge(w, v);
      ++stats.rule_iv;
      return;
    }
  }

  std::vector<std::vector<Node>> cycles_;
  std::vector<char> cycle_alive_;
  std::vector<std::vector<std::size_t>> node_cycles_;
  std::vector<std::size_t> preimage_;
  std::vector<Node> parent_;
  std::vector<char> alive_;
  std::deque<std::size_t> queue_;
};

std::string describe(std::size_t cycle, const std::string& what) {
  return "cycle " + std::to_string(cycle) + ": " + what;
}

// Graph vertex -> position on `cycle` of the side containing it.
std::vector<std::size_t> side_positions(const Cactus& kc, std::size_t cycle) {
  const auto& cyc = kc.cycles()[cycle];
  std::vector<std::size_t> pos_of_node(kc.num_nodes(), 0);
  for (std::size_t i = 0; i < cyc.size(); ++i)
    for (Node x : side_of_cycle(kc, cycle, cyc[i])) pos_of_node[x] = i;
  std::vector<std::size_t> pos(kc.phi().size());
  for (Vertex v = 0; v < pos.size(); ++v) pos[v] = pos_of_node[kc.phi()[v]];
  return pos;
}

}  // namespace

Cactus compact_cactus(const Cactus& kc, CompactionStats* stats) {
  CompactionStats local;
  Workspace ws(kc);
  ws.run(stats ? *stats : local);
  return ws.result(kc);
}

std::size_t Xylem::num_present() const { return static_cast<std::size_t>(std::count(present.begin(), present.end(), 1)); }

std::size_t Xylem::degree(std::size_t x) const {
  std::size_t d = 0;
  for (std::size_t y : adjacency[x]) d += present[y] ? 1 : 0;
  return d;
}

std::vector<std::size_t> Xylem::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (present[x] && degree(x) == 1) out.push_back(x);
  return out;
}

bool Xylem::is_tree() const {
  std::size_t nodes = 0, twice_edges = 0, start = size();
  for (std::size_t x = 0; x < size(); ++x) {
    if (!present[x]) continue;
    ++nodes;
    twice_edges += degree(x);
    if (start == size()) start = x;
  }
  if (nodes == 0) return true;
  if (twice_edges / 2 + 1 != nodes) return false;
  std::vector<char> seen(size(), 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t y : adjacency[x])
      if (present[y] && !seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  return reached == nodes;
}

Xylem build_xylem(const Cactus& kc) {
  Xylem x;
  x.num_cactus_nodes = kc.num_nodes();
  x.num_centers = kc.cycles().size();
  x.adjacency.assign(x.num_cactus_nodes + x.num_centers, {});
  x.present.assign(x.adjacency.size(), 1);
  for (std::size_t c = 0; c < kc.cycles().size(); ++c) {
    const std::size_t center = x.num_cactus_nodes + c;
    for (Node v : kc.cycles()[c]) {
      x.adjacency[center].push_back(v);
      x.adjacency[v].push_back(center);
    }
  }
  return x;
}

Xylem prune_xylem(const Xylem& x, const Cactus& kc) {
  Xylem pruned = x;
  for (Node v = 0; v < kc.num_nodes(); ++v)
    if (kc.junction_degree(v) == 1 && kc.is_singleton(v)) pruned.present[v] = 0;
  return pruned;
}

LeanPathStats lean_paths(const Xylem& pruned) {
  LeanPathStats stats;
  std::vector<char> seen(pruned.size(), 0);
  auto inner = [&](std::size_t x) { return pruned.present[x] && pruned.degree(x) == 2; };
  for (std::size_t x = 0; x < pruned.size(); ++x) {
    if (!inner(x) || seen[x]) continue;
    std::size_t length = 0;
    std::vector<std::size_t> stack{x};
    seen[x] = 1;
    while (!stack.empty()) {
      std::size_t y = stack.back();
      stack.pop_back();
      ++length;
      for (std::size_t z : pruned.adjacency[y])
        if (inner(z) && !seen[z]) {
          seen[z] = 1;
          stack.push_back(z);
        }
    }
    ++stats.count;
    stats.total_nodes += length;
    stats.max_length = std::max(stats.max_length, length);
  }
  return stats;
}

BoundAudit audit_bounds(const Cactus& kprime, std::size_t n, std::size_t delta) {
  BoundAudit a;
  a.vertices = kprime.num_nodes();
  a.n = n;
  a.delta = delta;
  if (delta == 0) {
    a.pass = a.vertices <= 1;
  } else {
    a.bound_floor = 30 * n / delta;
    a.pass = a.vertices * delta < 30 * n;
  }
  const Xylem pruned = prune_xylem(build_xylem(kprime), kprime);
  a.xylem_leaves = pruned.leaves().size();
  for (std::size_t x = 0; x < pruned.size(); ++x)
    if (pruned.present[x] && pruned.degree(x) >= 3) ++a.xylem_branching;
  a.lean = lean_paths(pruned);
  for (Node v = 0; v < kprime.num_nodes(); ++v)
    if (kprime.junction_degree(v) == 1 && kprime.is_singleton(v)) ++a.one_junction_singletons;
  return a;
}

Cactus contract_cactus_edge(const Cactus& kc, std::size_t cycle, std::size_t edge) {
  const auto& cyc = kc.cycles().at(cycle);
  if (edge >= cyc.size()) throw std::out_of_range("cycle edge out of range");
  const Node keep = std::min(cyc[edge], cyc[(edge + 1) % cyc.size()]);
  const Node gone = std::max(cyc[edge], cyc[(edge + 1) % cyc.size()]);
  auto renumber = [&](Node v) -> Node {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<std::vector<Node>> cycles;
  for (std::size_t c = 0; c < kc.cycles().size(); ++c) {
    std::vector<Node> next;
    for (Node v : kc.cycles()[c]) {
      if (c == cycle && v == gone) continue;
      next.push_back(renumber(v));
    }
    if (next.size() >= 2) cycles.push_back(std::move(next));
  }
  std::vector<Node> phi;
  for (Node v : kc.phi()) phi.push_back(renumber(v));
  return Cactus(kc.num_nodes() - 1, std::move(cycles), std::move(phi));
}

MinimalityReport check_minimal(const MultiGraph& g, const Cactus& kc, const std::vector<Cut>& targets) {
  MinimalityReport report;
  for (std::size_t c = 0; c < kc.cycles().size(); ++c) {
    for (std::size_t e = 0; e < kc.cycles()[c].size(); ++e) {
      const Cactus smaller = contract_cactus_edge(kc, c, e);
      std::set<std::vector<Vertex>> kept;
      for (const Cut& cut : represented_cuts(g, smaller)) kept.insert(cut.side);
      const bool loses = std::any_of(targets.begin(), targets.end(),
                                     [&](const Cut& cut) { return !kept.count(cut.side); });
      if (!loses) report.redundant_edges.emplace_back(c, e);
    }
  }
  report.minimal = report.redundant_edges.empty();
  return report;
}

PatternCounts compaction_patterns(const Cactus& kc) {
  PatternCounts p;
  auto singleton1 = [&](Node v) { return kc.junction_degree(v) == 1 && kc.is_singleton(v); };
  auto empty2 = [&](Node v) { return kc.junction_degree(v) == 2 && kc.is_empty(v); };
  for (const auto& cyc : kc.cycles()) {
    if (cyc.size() == 2) {
      if (singleton1(cyc[0]) || singleton1(cyc[1])) ++p.two_cycle_singleton;
      if (empty2(cyc[0]) || empty2(cyc[1])) ++p.two_cycle_empty_junction;
    } else if (cyc.size() == 3) {
      if (std::any_of(cyc.begin(), cyc.end(), singleton1)) ++p.three_cycle_singleton;
      if (std::count_if(cyc.begin(), cyc.end(), empty2) >= 2) ++p.three_cycle_two_empty;
    }
  }
  return p;
}

std::vector<std::string> check_cycle_edge_distribution(const MultiGraph& g, const Cactus& kc, std::size_t lambda) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < kc.cycles().size(); ++c) {
    const std::size_t k = kc.cycles()[c].size();
    if (k < 3) continue;
    const auto pos = side_positions(kc, c);
    std::vector<std::size_t> between(k * k, 0);
    for (const Edge& e : g.edges()) {
      std::size_t a = pos[e.u], b = pos[e.v];
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      ++between[a * k + b];
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        const bool adjacent = b == a + 1 || (a == 0 && b == k - 1);
        const std::size_t count = between[a * k + b];
        if (adjacent ? 2 * count != lambda : count != 0)
          out.push_back(describe(c, "sides " + std::to_string(a) + "," + std::to_string(b) + " share " +
                                        std::to_string(count) + " edges"));
      }
  }
  return out;
}

std::vector<std::string> check_nonempty_sides(const Cactus& kc) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < kc.cycles().size(); ++c)
    for (Node v : kc.cycles()[c]) {
      std::size_t size = 0;
      for (Node x : side_of_cycle(kc, c, v)) size += kc.preimage_size(x);
      if (size == 0) out.push_back(describe(c, "side at node " + std::to_string(v) + " is empty"));
    }
  return out;
}

std::vector<std::string> check_singleton_spacing(const Cactus& kc) {
  std::vector<std::string> out;
  auto singleton1 = [&](Node v) { return kc.junction_degree(v) == 1 && kc.is_singleton(v); };
  for (std::size_t c = 0; c < kc.cycles().size(); ++c) {
    const auto& cyc = kc.cycles()[c];
    const std::size_t pairs = cyc.size() == 2 ? 1 : cyc.size();
    for (std::size_t i = 0; i < pairs; ++i) {
      Node a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (singleton1(a) && singleton1(b))
        out.push_back(describe(c, "adjacent 1-junction singletons " + std::to_string(a) + "," + std::to_string(b)));
    }
  }
  return out;
}

std::vector<std::string> check_pruned_leaves(const Cactus& kc, std::size_t delta) {
  std::vector<std::string> out;
  const Xylem pruned = prune_xylem(build_xylem(kc), kc);
  if (!pruned.is_tree()) out.push_back("pruned xylem is not a tree");
  std::vector<std::size_t> expected;
  for (Node v = 0; v < kc.num_nodes(); ++v)
    if (kc.junction_degree(v) == 1 && !kc.is_singleton(v)) expected.push_back(v);
  const auto leaves = pruned.leaves();
  for (std::size_t x : leaves)
    if (pruned.is_center(x)) out.push_back("center " + std::to_string(x - pruned.num_cactus_nodes) + " is a leaf");
  std::vector<std::size_t> leaf_nodes;
  for (std::size_t x : leaves)
    if (!pruned.is_center(x)) leaf_nodes.push_back(x);
  if (leaf_nodes != expected) out.push_back("leaves differ from the 1-junction non-singletons");
  for (std::size_t x : leaf_nodes)
    if (kc.preimage_size(static_cast<Node>(x)) < delta)
      out.push_back("leaf " + std::to_string(x) + " holds " + std::to_string(kc.preimage_size(static_cast<Node>(x))) +
                    " vertices, fewer than delta");
  return out;
}

}  // namespace mincut
