#include "mincut/cactus.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "detail/weighted_graph.hpp"
#include "mincut/connectivity.hpp"

namespace mincut {

Cactus::Cactus(std::size_t num_nodes, std::vector<std::vector<Node>> cycles, std::vector<Node> phi)
    : num_nodes_(num_nodes), cycles_(std::move(cycles)), phi_(std::move(phi)) {
  if (num_nodes_ == 0) throw CactusError("cactus needs at least one node");
  node_cycles_.assign(num_nodes_, {});
  std::size_t incidences = 0;
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    const auto& cyc = cycles_[c];
    if (cyc.size() < 2) throw CactusError("cycle " + std::to_string(c) + " is shorter than 2");
    std::vector<Node> sorted(cyc);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw CactusError("cycle " + std::to_string(c) + " repeats a node");
    for (Node v : cyc) {
      if (v >= num_nodes_) throw CactusError("cycle node out of range");
      node_cycles_[v].push_back(c);
    }
    incidences += cyc.size();
  }
  // The node/cycle incidence graph is a tree iff K is connected and its
  // blocks are exactly the listed cycles.
  if (incidences + 1 != num_nodes_ + cycles_.size()) throw CactusError("cycles do not form a tree of blocks");
  detail::UnionFind uf(num_nodes_);
  for (const auto& cyc : cycles_)
    for (Node v : cyc) uf.unite(cyc[0], v);
  std::size_t parts = 0;
  uf.labels(&parts);
  if (parts != 1) throw CactusError("cactus is not connected");

  preimage_size_.assign(num_nodes_, 0);
  for (Node v : phi_) {
    if (v >= num_nodes_) throw CactusError("phi maps outside the cactus");
    ++preimage_size_[v];
  }
}

Cactus Cactus::from_graph(const MultiGraph& k, std::vector<Node> phi) {
  const std::size_t n = k.num_vertices();
  // Biconnected components by iterative Tarjan over edges.
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> disc(n, kUnset), low(n, 0);
  std::vector<std::uint32_t> edge_stack;
  std::vector<std::vector<std::uint32_t>> blocks;
  struct Frame {
    Vertex v;
    std::uint32_t parent_edge;
    std::size_t pos;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnset) continue;
    if (root != 0) throw CactusError("cactus is not connected");
    disc[root] = low[root] = counter++;
    call.push_back({root, kUnset, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      auto inc = k.incident(f.v);
      if (f.pos < inc.size()) {
        const Incidence e = inc[f.pos++];
        if (e.edge_index == f.parent_edge) continue;
        if (disc[e.neighbor] == kUnset) {
          edge_stack.push_back(e.edge_index);
          disc[e.neighbor] = low[e.neighbor] = counter++;
          call.push_back({e.neighbor, e.edge_index, 0});
        } else if (disc[e.neighbor] < disc[f.v]) {
          edge_stack.push_back(e.edge_index);
          low[f.v] = std::min(low[f.v], disc[e.neighbor]);
        }
        continue;
      }
      const Frame done = f;
      call.pop_back();
      if (call.empty()) break;
      Vertex parent = call.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        std::vector<std::uint32_t> block;
        std::uint32_t e;
        do {
          e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
        } while (e != done.parent_edge);
        blocks.push_back(std::move(block));
      }
    }
  }

  std::vector<std::vector<Node>> cycles;
  for (const auto& block : blocks) {
    if (block.size() < 2) throw CactusError("bridge found: K is not 2-edge-connected");
    std::map<Node, std::vector<Node>> adj;
    for (std::uint32_t e : block) {
      const Edge& ed = k.edge(e);
      adj[ed.u].push_back(ed.v);
      adj[ed.v].push_back(ed.u);
    }
    if (adj.size() != block.size()) throw CactusError("block is not a cycle");
    for (const auto& [v, nb] : adj)
      if (nb.size() != 2) throw CactusError("block is not a cycle");
    std::vector<Node> cyc{adj.begin()->first};
    Node prev = cyc[0];
    Node cur = adj.begin()->second[0];
    while (cur != cyc[0]) {
      cyc.push_back(cur);
      const auto& nb = adj[cur];
      Node next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    if (cyc.size() != block.size()) throw CactusError("block is not a cycle");
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end());
  return Cactus(n, std::move(cycles), std::move(phi));
}

std::vector<std::vector<Vertex>> Cactus::preimages() const {
  std::vector<std::vector<Vertex>> out(num_nodes_);
  for (Vertex v = 0; v < phi_.size(); ++v) out[phi_[v]].push_back(v);
  return out;
}

MultiGraph Cactus::graph() const {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& cyc : cycles_)
    for (std::size_t i = 0; i < cyc.size(); ++i) pairs.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
  return MultiGraph::from_pairs(num_nodes_, pairs);
}

std::size_t Cactus::num_edges() const {
  std::size_t m = 0;
  for (const auto& cyc : cycles_) m += cyc.size();
  return m;
}

Cactus Cactus::pull_back(const std::vector<Vertex>& map) const {
  std::vector<Node> phi(map.size());
  for (std::size_t v = 0; v < map.size(); ++v) phi[v] = phi_[map[v]];
  return Cactus(num_nodes_, cycles_, std::move(phi));
}

std::vector<Node> side_of_cycle(const Cactus& kc, std::size_t cycle, Node v) {
  const auto& cyc = kc.cycles().at(cycle);
  if (std::find(cyc.begin(), cyc.end(), v) == cyc.end())
    throw std::invalid_argument("node is not on the cycle");
  // Walk the block tree from v, never re-entering `cycle`.
  std::vector<char> node_seen(kc.num_nodes(), 0), cycle_seen(kc.cycles().size(), 0);
  cycle_seen[cycle] = 1;
  node_seen[v] = 1;
  std::vector<Node> stack{v}, side;
  while (!stack.empty()) {
    Node x = stack.back();
    stack.pop_back();
    side.push_back(x);
    for (std::size_t c : kc.cycles_of(x)) {
      if (cycle_seen[c]) continue;
      cycle_seen[c] = 1;
      for (Node y : kc.cycles()[c])
        if (!node_seen[y]) {
          node_seen[y] = 1;
          stack.push_back(y);
        }
    }
  }
  std::sort(side.begin(), side.end());
  return side;
}

std::vector<CactusCut> min_cuts_of_cactus(const Cactus& kc) {
  std::vector<CactusCut> out;
  const Node anchor = kc.phi().empty() ? 0 : kc.phi()[0];
  for (std::size_t c = 0; c < kc.cycles().size(); ++c) {
    const auto& cyc = kc.cycles()[c];
    const std::size_t k = cyc.size();
    std::vector<std::vector<Node>> sides(k);
    for (std::size_t i = 0; i < k; ++i) sides[i] = side_of_cycle(kc, c, cyc[i]);
    // Edge i joins cyc[i] and cyc[i+1]; removing edges i < j cuts off
    // the arc cyc[i+1..j].
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Node> arc;
      for (std::size_t j = i + 1; j < k; ++j) {
        arc.insert(arc.end(), sides[j].begin(), sides[j].end());
        CactusCut cut{c, i, j, arc};
        std::sort(cut.nodes.begin(), cut.nodes.end());
        if (std::binary_search(cut.nodes.begin(), cut.nodes.end(), anchor)) {
          std::vector<Node> rest;
          std::vector<char> in(kc.num_nodes(), 0);
          for (Node x : cut.nodes) in[x] = 1;
          for (Node x = 0; x < kc.num_nodes(); ++x)
            if (!in[x]) rest.push_back(x);
          cut.nodes = std::move(rest);
        }
        out.push_back(std::move(cut));
      }
    }
  }
  return out;
}

std::vector<Vertex> lift_side(const Cactus& kc, const std::vector<Node>& nodes) {
  std::vector<char> in(kc.num_nodes(), 0);
  for (Node x : nodes) in[x] = 1;
  std::vector<Vertex> side;
  for (Vertex v = 0; v < kc.phi().size(); ++v)
    if (in[kc.phi()[v]]) side.push_back(v);
  if (side.empty() || side.size() == kc.phi().size()) return {};
  return canonical_side(kc.phi().size(), side);
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

bool crossing(const Bits& a, const Bits& b) {
  // Both sides exclude vertex 0, so the outer quadrant is never empty.
  return a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a);
}

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = b.find_first(); i != Bits::npos; i = b.find_next(i)) h = (h ^ i) * 0x100000001b3ull;
    return h;
  }
};

Bits canonical_bits(Bits b) {
  if (b.test(0)) b.flip();
  return b;
}

struct Slot {
  Bits block;        // child block of a cycle (canonical cut side)
  Node node = 0;     // cactus node standing for the block
};

}  // namespace

Cactus build_cactus(const MultiGraph& g, const std::vector<Cut>& cuts) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("cactus construction needs at least two vertices");
  if (cuts.empty()) throw CactusError("empty min-cut family");

  std::vector<Bits> sets;
  std::unordered_map<Bits, std::size_t, BitsHash> index;
  for (const Cut& c : cuts) {
    if (c.size != cuts[0].size) throw CactusError("cuts of different sizes");
    Bits b(n);
    for (Vertex v : c.side) {
      if (v >= n) throw CactusError("cut vertex out of range");
      b.set(v);
    }
    if (b.none() || b.test(0)) throw CactusError("cut is not in canonical form");
    if (index.emplace(b, sets.size()).second) sets.push_back(std::move(b));
  }
  const std::size_t f = sets.size();

  // Crossing classes.
  detail::UnionFind uf(f);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = i + 1; j < f; ++j)
      if (crossing(sets[i], sets[j])) uf.unite(static_cast<Vertex>(i), static_cast<Vertex>(j));
  std::size_t class_count = 0;
  auto cls = uf.labels(&class_count);
  std::vector<std::vector<std::size_t>> classes(class_count);
  for (std::size_t i = 0; i < f; ++i) classes[cls[i]].push_back(i);

  // Every cycle as a ring of blocks; ring[0] is the block containing vertex 0.
  std::vector<std::vector<Bits>> rings;
  std::vector<char> covered(f, 0);
  for (const auto& members : classes) {
    if (members.size() < 2) continue;
    // Atoms: vertices with identical membership across the class.
    std::map<std::vector<bool>, std::size_t> atom_of;
    std::vector<Bits> atoms;
    for (Vertex v = 0; v < n; ++v) {
      std::vector<bool> signature(members.size());
      for (std::size_t k = 0; k < members.size(); ++k) signature[k] = sets[members[k]].test(v);
      auto [it, fresh] = atom_of.emplace(std::move(signature), atoms.size());
      if (fresh) atoms.emplace_back(n);
      atoms[it->second].set(v);
    }
    const std::size_t k = atoms.size();
    if (k < 4) throw CactusError("crossing class with fewer than four atoms");
    auto is_cut = [&](const Bits& b) { return index.count(canonical_bits(b)) > 0; };
    std::vector<std::vector<std::size_t>> adj(k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (is_cut(atoms[a] | atoms[b])) {
          adj[a].push_back(b);
          adj[b].push_back(a);
        }
    std::vector<std::size_t> order{0};
    std::size_t prev = k;
    for (;;) {
      const std::size_t cur = order.back();
      if (adj[cur].size() != 2) throw CactusError("crossing class does not form a circular partition");
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      if (next == 0) break;
      if (order.size() == k) throw CactusError("crossing class does not form a circular partition");
      prev = cur;
      order.push_back(next);
    }
    if (order.size() != k) throw CactusError("crossing class does not form a circular partition");
    // Every arc of the ring must be a min-cut.
    std::vector<Bits> ring;
    for (std::size_t i : order) ring.push_back(atoms[i]);
    for (std::size_t i = 0; i < k; ++i) {
      Bits arc(n);
      for (std::size_t len = 1; len < k; ++len) {
        arc |= ring[(i + len - 1) % k];
        auto it = index.find(canonical_bits(arc));
        if (it == index.end()) throw CactusError("circular partition arc is not a min-cut");
        covered[it->second] = 1;
      }
    }
    rings.push_back(std::move(ring));
  }
  for (std::size_t i = 0; i < f; ++i) {
    if (covered[i]) continue;
    Bits rest = sets[i];
    rest.flip();
    rings.push_back({std::move(rest), sets[i]});
  }

  // Child blocks (ring positions >= 1) form a laminar family; each block
  // gets its own node and hangs off the smallest block strictly containing its
  // ring's outer part, or off the root node.
  std::vector<Slot> slots;
  std::vector<std::size_t> ring_first_slot;
  for (auto& ring : rings) {
    ring_first_slot.push_back(slots.size());
    for (std::size_t i = 1; i < ring.size(); ++i) slots.push_back({ring[i], 0});
  }
  std::vector<std::size_t> slot_ring(slots.size());
  for (std::size_t r = 0; r < rings.size(); ++r)
    for (std::size_t i = 1; i < rings[r].size(); ++i) slot_ring[ring_first_slot[r] + i - 1] = r;

  // Sort slots by block size descending; containment is then found by
  // scanning smaller-indexed (larger) blocks.
  std::vector<std::size_t> by_size(slots.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return slots[a].block.count() > slots[b].block.count(); });
  constexpr Node kRoot = 0;
  for (std::size_t s = 0; s < slots.size(); ++s) slots[by_size[s]].node = static_cast<Node>(s + 1);
  const std::size_t num_nodes = slots.size() + 1;

  // Vertex -> node of the smallest block containing it.
  std::vector<Node> phi(n, kRoot);
  std::vector<std::size_t> best(n, n + 1);
  for (const Slot& s : slots) {
    const std::size_t size = s.block.count();
    for (std::size_t v = s.block.find_first(); v != Bits::npos; v = s.block.find_next(v))
      if (size < best[v]) {
        best[v] = size;
        phi[v] = s.node;
      }
  }

  std::vector<std::vector<Node>> cycles;
  for (std::size_t r = 0; r < rings.size(); ++r) {
    Bits outer(n);
    for (std::size_t i = 1; i < rings[r].size(); ++i) outer |= rings[r][i];
    const std::size_t outer_size = outer.count();
    Node host = kRoot;
    std::size_t host_size = n + 1;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (slot_ring[s] == r) continue;
      const std::size_t size = slots[s].block.count();
      if (size < outer_size || size >= host_size) continue;
      if (outer.is_subset_of(slots[s].block)) {
        host = slots[s].node;
        host_size = size;
      }
    }
    std::vector<Node> cyc{host};
    for (std::size_t i = 1; i < rings[r].size(); ++i) cyc.push_back(slots[ring_first_slot[r] + i - 1].node);
    cycles.push_back(std::move(cyc));
  }

  // An empty node lying on exactly three 2-cycles is the same cut family as
  // a 3-cycle through the other three endpoints; prefer the 3-cycle.
  std::vector<std::size_t> preimage(num_nodes, 0);
  for (Node v : phi) ++preimage[v];
  std::vector<std::vector<std::size_t>> node_cycles(num_nodes);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (Node v : cycles[c]) node_cycles[v].push_back(c);
  std::vector<char> drop_cycle(cycles.size(), 0), drop_node(num_nodes, 0);
  for (Node v = 0; v < num_nodes; ++v) {
    const auto& cs = node_cycles[v];
    if (preimage[v] != 0 || cs.size() != 3) continue;
    if (!std::all_of(cs.begin(), cs.end(), [&](std::size_t c) { return cycles[c].size() == 2 && !drop_cycle[c]; }))
      continue;
    std::vector<Node> tri;
    for (std::size_t c : cs) {
      tri.push_back(cycles[c][0] == v ? cycles[c][1] : cycles[c][0]);
      drop_cycle[c] = 1;
    }
    drop_node[v] = 1;
    cycles.push_back(std::move(tri));
    drop_cycle.push_back(0);
  }
  std::vector<Node> renumber(num_nodes);
  Node next = 0;
  for (Node v = 0; v < num_nodes; ++v) renumber[v] = drop_node[v] ? 0 : next++;
  std::vector<std::vector<Node>> kept;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (drop_cycle[c]) continue;
    for (Node& v : cycles[c]) v = renumber[v];
    kept.push_back(std::move(cycles[c]));
  }
  for (Node& v : phi) v = renumber[v];
  return Cactus(next, std::move(kept), std::move(phi));
}

std::vector<Cut> represented_cuts(const MultiGraph& g, const Cactus& kc) {
  std::vector<Cut> out;
  for (const CactusCut& cc : min_cuts_of_cactus(kc)) {
    auto side = lift_side(kc, cc.nodes);
    if (side.empty()) continue;
    out.push_back({side, cut_size(g, side)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CactusValidation validate_cactus(const MultiGraph& g, const Cactus& kc, const std::vector<Cut>& s) {
  CactusValidation report;
  if (kc.num_graph_vertices() != g.num_vertices()) {
    report.is_cactus = false;
    report.structure_error = "phi does not cover the graph";
    return report;
  }
  std::size_t lambda = 0;
  bool have_lambda = false;
  if (!s.empty()) {
    lambda = s.front().size;
    have_lambda = true;
  }
  std::set<std::vector<Vertex>> represented;
  std::vector<std::vector<Vertex>> lifted;
  for (const CactusCut& cc : min_cuts_of_cactus(kc)) {
    auto side = lift_side(kc, cc.nodes);
    if (side.empty()) {
      report.extra.push_back({});
      continue;
    }
    represented.insert(side);
    lifted.push_back(std::move(side));
  }
  if (!have_lambda && g.num_vertices() >= 2 && g.is_connected()) lambda = edge_connectivity(g);
  for (const auto& side : lifted)
    if (cut_size(g, side) != lambda) report.extra.push_back(side);
  for (const Cut& c : s)
    if (!represented.count(c.side)) report.missing.push_back(c);
  return report;
}

CactusValidation validate_cactus(const MultiGraph& g, const MultiGraph& k, const std::vector<Node>& phi,
                                 const std::vector<Cut>& s) {
  try {
    return validate_cactus(g, Cactus::from_graph(k, phi), s);
  } catch (const CactusError& e) {
    CactusValidation report;
    report.is_cactus = false;
    report.structure_error = e.what();
    return report;
  }
}

std::string format_cactus(const Cactus& kc) {
  std::string out = "cactus " + std::to_string(kc.num_nodes()) + " " + std::to_string(kc.cycles().size()) + "\n";
  for (const auto& cyc : kc.cycles()) {
    out += "y " + std::to_string(cyc.size());
    for (Node v : cyc) out += " " + std::to_string(v);
    out += '\n';
  }
  for (Vertex v = 0; v < kc.phi().size(); ++v)
    out += "map " + std::to_string(v) + " " + std::to_string(kc.phi()[v]) + "\n";
  return out;
}

Cactus parse_cactus(std::string_view text) {
  std::size_t nodes = 0, cycle_count = 0;
  bool header = false;
  std::vector<std::vector<Node>> cycles;
  std::vector<std::pair<Vertex, Node>> maps;
  std::size_t line_no = 0, pos = 0;
  auto number = [&](std::string_view tok) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line_no, "bad number");
    return value;
  };
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::vector<std::string_view> tok;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) tok.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "cactus" && tok.size() == 3) {
      nodes = number(tok[1]);
      cycle_count = number(tok[2]);
      header = true;
    } else if (tok[0] == "y" && tok.size() >= 2) {
      std::size_t k = number(tok[1]);
      if (tok.size() != k + 2) throw ParseError(line_no, "cycle length mismatch");
      std::vector<Node> cyc;
      for (std::size_t i = 0; i < k; ++i) cyc.push_back(static_cast<Node>(number(tok[i + 2])));
      cycles.push_back(std::move(cyc));
    } else if (tok[0] == "map" && tok.size() == 3) {
      maps.emplace_back(static_cast<Vertex>(number(tok[1])), static_cast<Node>(number(tok[2])));
    } else {
      throw ParseError(line_no, "unrecognised cactus line");
    }
  }
  if (!header) throw ParseError(line_no, "missing cactus header");
  if (cycles.size() != cycle_count) throw ParseError(line_no, "cycle count mismatch");
  std::vector<Node> phi(maps.size());
  std::vector<char> seen(maps.size(), 0);
  for (auto [g, k] : maps) {
    if (g >= phi.size() || seen[g]) throw ParseError(line_no, "map lines must cover 0..n-1 once");
    seen[g] = 1;
    phi[g] = k;
  }
  return Cactus(nodes, std::move(cycles), std::move(phi));
}

}  // namespace mincut
