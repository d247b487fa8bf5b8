#include "mincut/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail/closed_sets.hpp"
#include "detail/flow.hpp"
#include "detail/weighted_graph.hpp"

namespace mincut {

namespace {

using detail::UnionFind;
using detail::WeightedGraph;

/// Maximum-adjacency scan over a unit-weight multigraph with a bucket queue.
/// Calls on_edge(edge_index, q) when an edge is scanned, q being the
/// attachment of its unscanned endpoint right after the increment.
template <class OnEdge>
std::vector<Vertex> bucket_ma_scan(const MultiGraph& g, Vertex start, std::vector<std::size_t>& attach,
                                   OnEdge&& on_edge) {
  const std::size_t n = g.num_vertices();
  attach.assign(n, 0);
  std::vector<char> scanned(n, 0), edge_seen(g.num_edges(), 0);
  std::vector<std::vector<Vertex>> buckets(1);
  for (Vertex v = static_cast<Vertex>(n); v-- > 0;)
    if (v != start) buckets[0].push_back(v);
  buckets[0].push_back(start);
  std::size_t top = 0;
  std::vector<Vertex> order;
  order.reserve(n);
  while (order.size() < n) {
    while (buckets[top].empty()) --top;
    Vertex x = buckets[top].back();
    buckets[top].pop_back();
    if (scanned[x] || attach[x] != top) continue;
    scanned[x] = 1;
    order.push_back(x);
    for (const Incidence& inc : g.incident(x)) {
      if (edge_seen[inc.edge_index]) continue;
      edge_seen[inc.edge_index] = 1;
      Vertex y = inc.neighbor;
      std::size_t q = ++attach[y];
      on_edge(inc.edge_index, q);
      if (q >= buckets.size()) buckets.resize(q + 1);
      buckets[q].push_back(y);
      top = std::max(top, q);
    }
  }
  return order;
}

std::uint64_t contract_until_single(WeightedGraph g, std::uint64_t bound, bool halve) {
  while (g.n > 1) {
    std::uint64_t threshold = halve ? std::max<std::uint64_t>(1, (bound + 1) / 2) : bound;
    UnionFind uf(g.n);
    detail::ma_contraction_round(g, threshold, uf);
    std::size_t count = 0;
    auto label = uf.labels(&count);
    g = g.quotient(label, count);
    if (g.n > 1) bound = std::min(bound, g.min_weighted_degree());
  }
  return bound;
}

}  // namespace

MaOrdering ma_ordering(const MultiGraph& g, Vertex start) {
  if (start >= g.num_vertices()) throw std::invalid_argument("start vertex out of range");
  if (!g.is_connected()) throw std::invalid_argument("maximum-adjacency ordering needs a connected graph");
  std::vector<std::size_t> attach;
  MaOrdering result;
  result.order = bucket_ma_scan(g, start, attach, [](std::size_t, std::size_t) {});
  result.attachment.reserve(result.order.size());
  for (Vertex v : result.order) result.attachment.push_back(attach[v]);
  return result;
}

std::size_t edge_connectivity(const MultiGraph& g) {
  if (g.num_vertices() < 2) throw std::invalid_argument("edge connectivity needs at least two vertices");
  if (!g.is_connected()) throw std::invalid_argument("edge connectivity of a disconnected graph");
  WeightedGraph wg = WeightedGraph::from_multigraph(g);
  std::uint64_t upper = contract_until_single(wg, wg.min_weighted_degree(), true);
  return static_cast<std::size_t>(contract_until_single(std::move(wg), upper, false));
}

MultiGraph sparse_certificate(const MultiGraph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("certificate order must be positive");
  std::vector<std::size_t> forest(g.num_edges(), 0);
  std::vector<std::size_t> attach;
  bucket_ma_scan(g, 0, attach, [&](std::size_t edge_index, std::size_t q) { forest[edge_index] = q; });
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (forest[i] <= k) kept.push_back(g.edge(i));
  return MultiGraph(g.num_vertices(), std::move(kept));
}

ReducedGraph reduce_preserving_min_cuts(const MultiGraph& g, std::size_t lambda) {
  WeightedGraph wg = WeightedGraph::from_multigraph(g);
  std::vector<Vertex> map(g.num_vertices());
  for (Vertex v = 0; v < map.size(); ++v) map[v] = v;
  while (wg.n > 1) {
    UnionFind uf(wg.n);
    if (detail::ma_contraction_round(wg, lambda + 1, uf) == 0) break;
    std::size_t count = 0;
    auto label = uf.labels(&count);
    for (Vertex& m : map) m = label[m];
    wg = wg.quotient(label, count);
  }
  std::size_t count = wg.n;
  return {contract_by_map(g, map, count).graph, std::move(map)};
}

namespace {

struct SideCollector {
  explicit SideCollector(std::size_t n) : member(n, 0) {}
  void add(Vertex v) { member[v] = 1; }
  void remove(Vertex v) { member[v] = 0; }
  void emit() { sets.push_back(member); }
  std::vector<char> member;
  std::vector<std::vector<char>> sets;
};

}  // namespace

std::vector<Cut> min_cut_family(const MultiGraph& g, std::size_t lambda) {
  const std::size_t n = g.num_vertices();
  if (n < 2) return {};
  WeightedGraph wg = WeightedGraph::from_multigraph(g);

  // Breadth-first order from vertex 0.
  std::vector<Vertex> order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& arc : wg.neighbors(order[i]))
      if (!seen[arc.to]) {
        seen[arc.to] = 1;
        order.push_back(arc.to);
      }
  if (order.size() != n) throw std::invalid_argument("min-cut family of a disconnected graph");

  std::vector<Cut> cuts;
  const auto source = static_cast<Vertex>(n);
  for (std::size_t i = 1; i < n; ++i) {
    detail::FlowNetwork net(n + 1);
    for (Vertex u = 0; u < n; ++u)
      for (const auto& arc : wg.neighbors(u))
        if (u < arc.to) net.add_edge(u, arc.to, arc.weight, arc.weight);
    for (std::size_t j = 0; j < i; ++j)
      net.add_edge(source, order[j], detail::FlowNetwork::kInfinite, detail::FlowNetwork::kInfinite);
    const Vertex sink = order[i];
    std::uint64_t flow = net.max_flow(source, sink, lambda + 1);
    if (flow < lambda) throw std::logic_error("found a cut smaller than the given edge connectivity");
    if (flow > lambda) continue;

    auto cond = detail::condense(n + 1, net.residual_arcs());
    SideCollector collector(cond.count);
    detail::ClosedSetEnumerator<SideCollector> enumerator(cond.count, cond.arcs, cond.component[source],
                                                          cond.component[sink]);
    enumerator.run(collector);
    for (const auto& member : collector.sets) {
      std::vector<Vertex> side;
      for (Vertex v = 0; v < n; ++v)
        if (member[cond.component[v]]) side.push_back(v);
      cuts.push_back({canonical_side(n, side), lambda});
    }
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace mincut
