#include "mincut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace mincut::oracle {

namespace {

void require_connected(const MultiGraph& g) {
  if (g.num_vertices() < 2) throw std::invalid_argument("oracle needs at least two vertices");
  if (!g.is_connected()) throw std::invalid_argument("oracle input is disconnected");
}

}  // namespace

MinCuts enumerate_min_cuts_bruteforce(const MultiGraph& g, std::size_t limit) {
  const std::size_t n = g.num_vertices();
  if (n > limit) throw std::invalid_argument("oracle limit exceeded: n=" + std::to_string(n));
  if (n > 40) throw std::invalid_argument("brute-force oracle supports at most 40 vertices");
  require_connected(g);

  // Vertex 0 stays outside; bit i-1 of the mask stands for vertex i.
  // Gray-code walk: flipping v changes the cut by deg(v) - 2 * d(v, side).
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> nbrs(n);
  {
    std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n, 0));
    for (const Edge& e : g.edges()) {
      ++mult[e.u][e.v];
      ++mult[e.v][e.u];
    }
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (mult[u][v]) nbrs[u].emplace_back(v, mult[u][v]);
  }
  std::vector<char> in(n, 0);
  std::uint64_t mask = 0;
  long long size = 0;
  long long best = -1;
  std::vector<std::uint64_t> best_masks;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto bit = static_cast<unsigned>(std::countr_zero(step));
    const Vertex v = bit + 1;
    long long inside = 0, degree = 0;
    for (auto [w, m] : nbrs[v]) {
      degree += static_cast<long long>(m);
      if (in[w]) inside += static_cast<long long>(m);
    }
    if (in[v]) {
      size -= degree - 2 * inside;
    } else {
      size += degree - 2 * inside;
    }
    in[v] ^= 1;
    mask ^= std::uint64_t{1} << bit;
    if (best < 0 || size < best) {
      best = size;
      best_masks.clear();
    }
    if (size == best) best_masks.push_back(mask);
  }

  MinCuts result;
  result.lambda = static_cast<std::size_t>(best);
  for (std::uint64_t m : best_masks) {
    Cut cut;
    cut.size = result.lambda;
    for (Vertex v = 1; v < n; ++v)
      if (m >> (v - 1) & 1) cut.side.push_back(v);
    result.cuts.push_back(std::move(cut));
  }
  std::sort(result.cuts.begin(), result.cuts.end());
  return result;
}

MinCuts enumerate_min_cuts_maxflow(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kFlowLimit) throw std::invalid_argument("max-flow oracle supports at most 64 vertices");
  require_connected(g);

  std::vector<std::vector<long long>> cap(n, std::vector<long long>(n, 0));
  for (const Edge& e : g.edges()) {
    ++cap[e.u][e.v];
    ++cap[e.v][e.u];
  }

  struct Result {
    long long value;
    std::vector<std::vector<long long>> residual;
  };
  auto edmonds_karp = [&](Vertex s, Vertex t) {
    auto res = cap;
    long long value = 0;
    for (;;) {
      std::vector<int> parent(n, -1);
      parent[s] = static_cast<int>(s);
      std::vector<Vertex> queue{s};
      for (std::size_t i = 0; i < queue.size() && parent[t] < 0; ++i)
        for (Vertex y = 0; y < n; ++y)
          if (parent[y] < 0 && res[queue[i]][y] > 0) {
            parent[y] = static_cast<int>(queue[i]);
            queue.push_back(y);
          }
      if (parent[t] < 0) break;
      long long push = -1;
      for (Vertex y = t; y != s; y = static_cast<Vertex>(parent[y])) {
        long long r = res[static_cast<Vertex>(parent[y])][y];
        push = push < 0 ? r : std::min(push, r);
      }
      for (Vertex y = t; y != s; y = static_cast<Vertex>(parent[y])) {
        res[static_cast<Vertex>(parent[y])][y] -= push;
        res[y][static_cast<Vertex>(parent[y])] += push;
      }
      value += push;
    }
    return Result{value, std::move(res)};
  };

  std::vector<Result> flows;
  long long lambda = -1;
  for (Vertex t = 1; t < n; ++t) {
    flows.push_back(edmonds_karp(0, t));
    if (lambda < 0 || flows.back().value < lambda) lambda = flows.back().value;
  }

  std::vector<std::uint64_t> found;
  for (Vertex t = 1; t < n; ++t) {
    const Result& f = flows[t - 1];
    if (f.value != lambda) continue;
    // closure[v]: v plus everything reachable from v in the residual graph.
    std::vector<std::uint64_t> closure(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      std::uint64_t seen = std::uint64_t{1} << v;
      std::vector<Vertex> stack{v};
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y = 0; y < n; ++y)
          if (f.residual[x][y] > 0 && !(seen >> y & 1)) {
            seen |= std::uint64_t{1} << y;
            stack.push_back(y);
          }
      }
      closure[v] = seen;
    }
    // Source sides: residual-closed sets containing 0 and not t. Decide
    // vertices in index order; an included vertex pulls in its closure.
    const std::uint64_t forbidden_bit = std::uint64_t{1} << t;
    std::function<void(Vertex, std::uint64_t, std::uint64_t)> branch = [&](Vertex v, std::uint64_t in,
                                                                           std::uint64_t out) {
      if (v == n) {
        found.push_back(in);
        return;
      }
      if (in >> v & 1) return branch(v + 1, in, out);
      if (!(out >> v & 1)) {
        std::uint64_t grown = in | closure[v];
        if ((grown & out) == 0 && !(grown & forbidden_bit)) branch(v + 1, grown, out);
      }
      // Excluding v is only consistent if nothing already inside reaches it.
      branch(v + 1, in, out | (std::uint64_t{1} << v));
    };
    std::uint64_t start = closure[0];
    if (start & forbidden_bit) continue;
    branch(0, start, forbidden_bit);
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  MinCuts result;
  result.lambda = static_cast<std::size_t>(lambda);
  for (std::uint64_t side : found) {
    Cut cut;
    cut.size = result.lambda;
    // side contains vertex 0; the canonical side is its complement.
    for (Vertex v = 1; v < n; ++v)
      if (!(side >> v & 1)) cut.side.push_back(v);
    result.cuts.push_back(std::move(cut));
  }
  std::sort(result.cuts.begin(), result.cuts.end());
  result.cuts.erase(std::unique(result.cuts.begin(), result.cuts.end()), result.cuts.end());
  return result;
}

CutCounts count_min_cuts(const MultiGraph& g, std::size_t limit) {
  auto all = enumerate_min_cuts_bruteforce(g, limit);
  CutCounts counts;
  counts.total = all.cuts.size();
  for (const Cut& c : all.cuts) (c.trivial(g.num_vertices()) ? counts.trivial : counts.non_trivial) += 1;
  return counts;
}

std::vector<Cut> non_trivial(const std::vector<Cut>& cuts, std::size_t n) {
  std::vector<Cut> out;
  for (const Cut& c : cuts)
    if (!c.trivial(n)) out.push_back(c);
  return out;
}

}  // namespace mincut::oracle
