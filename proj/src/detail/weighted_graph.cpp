#include "detail/weighted_graph.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace mincut::detail {

namespace {

WeightedGraph build(std::size_t n, std::vector<std::tuple<Vertex, Vertex, std::uint64_t>>& list) {
  std::sort(list.begin(), list.end());
  WeightedGraph g;
  g.n = n;
  g.offsets.assign(n + 1, 0);
  std::vector<std::tuple<Vertex, Vertex, std::uint64_t>> merged;
  merged.reserve(list.size());
  for (const auto& item : list) {
    if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(item) &&
        std::get<1>(merged.back()) == std::get<1>(item)) {
      std::get<2>(merged.back()) += std::get<2>(item);
    } else {
      merged.push_back(item);
    }
  }
  for (const auto& [u, v, w] : merged) {
    ++g.offsets[u + 1];
    ++g.offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets[i + 1] += g.offsets[i];
  g.arcs.resize(g.offsets[n]);
  std::vector<std::size_t> fill(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [u, v, w] : merged) {
    g.arcs[fill[u]++] = {v, w};
    g.arcs[fill[v]++] = {u, w};
  }
  return g;
}

}  // namespace

WeightedGraph WeightedGraph::from_multigraph(const MultiGraph& g) {
  std::vector<std::tuple<Vertex, Vertex, std::uint64_t>> list;
  list.reserve(g.num_edges());
  for (const Edge& e : g.edges()) list.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), 1);
  return build(g.num_vertices(), list);
}

WeightedGraph WeightedGraph::quotient(std::span<const Vertex> label, std::size_t count) const {
  std::vector<std::tuple<Vertex, Vertex, std::uint64_t>> list;
  for (Vertex u = 0; u < n; ++u) {
    for (const Arc& a : neighbors(u)) {
      if (u >= a.to) continue;
      Vertex lu = label[u], lv = label[a.to];
      if (lu == lv) continue;
      list.emplace_back(std::min(lu, lv), std::max(lu, lv), a.weight);
    }
  }
  return build(count, list);
}

std::uint64_t WeightedGraph::weighted_degree(Vertex v) const {
  std::uint64_t d = 0;
  for (const Arc& a : neighbors(v)) d += a.weight;
  return d;
}

std::uint64_t WeightedGraph::min_weighted_degree() const {
  std::uint64_t best = weighted_degree(0);
  for (Vertex v = 1; v < n; ++v) best = std::min(best, weighted_degree(v));
  return best;
}

UnionFind::UnionFind(std::size_t n) : parent_(n) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<Vertex>(i);
}

Vertex UnionFind::find(Vertex v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool UnionFind::unite(Vertex a, Vertex b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  parent_[b] = a;
  return true;
}

std::vector<Vertex> UnionFind::labels(std::size_t* count) {
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> root_label(parent_.size(), kUnset);
  std::vector<Vertex> label(parent_.size());
  Vertex next = 0;
  for (Vertex v = 0; v < parent_.size(); ++v) {
    Vertex r = find(v);
    if (root_label[r] == kUnset) root_label[r] = next++;
    label[v] = root_label[r];
  }
  *count = next;
  return label;
}

std::size_t ma_contraction_round(const WeightedGraph& g, std::uint64_t threshold, UnionFind& uf) {
  std::vector<std::uint64_t> attach(g.n, 0);
  std::vector<char> scanned(g.n, 0);
  // Max-heap on attachment; ties go to the smaller vertex id.
  std::priority_queue<std::pair<std::uint64_t, Vertex>> heap;
  std::size_t merges = 0;
  Vertex next_root = 0;
  std::size_t done = 0;
  while (done < g.n) {
    if (heap.empty()) {
      while (scanned[next_root]) ++next_root;
      heap.emplace(0, static_cast<Vertex>(g.n - 1 - next_root));
    }
    auto [key, inv] = heap.top();
    heap.pop();
    Vertex x = static_cast<Vertex>(g.n - 1 - inv);
    if (scanned[x] || key != attach[x]) continue;
    scanned[x] = 1;
    ++done;
    for (const auto& arc : g.neighbors(x)) {
      if (scanned[arc.to]) continue;
      attach[arc.to] += arc.weight;
      if (attach[arc.to] >= threshold && uf.unite(x, arc.to)) ++merges;
      heap.emplace(attach[arc.to], static_cast<Vertex>(g.n - 1 - arc.to));
    }
  }
  return merges;
}

}  // namespace mincut::detail
