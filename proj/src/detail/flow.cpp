#include "detail/flow.hpp"

#include <algorithm>
#include <limits>

namespace mincut::detail {

void FlowNetwork::add_edge(Vertex u, Vertex v, std::uint64_t cap_uv, std::uint64_t cap_vu) {
  auto index = static_cast<std::uint32_t>(arcs_.size());
  arcs_.push_back({v, cap_uv, head_[u]});
  head_[u] = index;
  arcs_.push_back({u, cap_vu, head_[v]});
  head_[v] = index + 1;
}

std::uint64_t FlowNetwork::max_flow(Vertex s, Vertex t, std::uint64_t limit) {
  std::uint64_t flow = 0;
  const std::size_t n = head_.size();
  std::vector<std::uint32_t> via(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  while (flow < limit) {
    std::fill(via.begin(), via.end(), kNone);
    queue.clear();
    queue.push_back(s);
    via[s] = kNone - 1;
    for (std::size_t qi = 0; qi < queue.size() && via[t] == kNone; ++qi) {
      Vertex x = queue[qi];
      for (std::uint32_t a = head_[x]; a != kNone; a = arcs_[a].next) {
        if (arcs_[a].residual == 0 || via[arcs_[a].to] != kNone) continue;
        via[arcs_[a].to] = a;
        queue.push_back(arcs_[a].to);
      }
    }
    if (via[t] == kNone) break;
    std::uint64_t push = limit - flow;
    for (Vertex x = t; x != s; x = arcs_[via[x] ^ 1].to) push = std::min(push, arcs_[via[x]].residual);
    for (Vertex x = t; x != s; x = arcs_[via[x] ^ 1].to) {
      arcs_[via[x]].residual -= push;
      arcs_[via[x] ^ 1].residual += push;
    }
    flow += push;
  }
  return flow;
}

std::vector<std::pair<Vertex, Vertex>> FlowNetwork::residual_arcs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    if (arcs_[i].residual > 0) out.emplace_back(arcs_[i ^ 1].to, arcs_[i].to);
  return out;
}

Condensation condense(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  std::vector<std::size_t> offsets(n + 1, 0);
  for (auto [u, v] : arcs) ++offsets[u + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<Vertex> out(arcs.size());
  {
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (auto [u, v] : arcs) out[fill[u]++] = v;
  }

  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // vertex, next arc position
  std::vector<Vertex> comp(n, 0);
  std::uint32_t counter = 0;
  std::size_t comps = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, offsets[root]);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [x, pos] = call.back();
      if (pos < offsets[x + 1]) {
        Vertex y = out[pos++];
        if (index[y] == kUnvisited) {
          index[y] = low[y] = counter++;
          stack.push_back(y);
          on_stack[y] = 1;
          call.emplace_back(y, offsets[y]);
        } else if (on_stack[y]) {
          low[x] = std::min(low[x], index[y]);
        }
        continue;
      }
      Vertex done = x;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        Vertex y;
        do {
          y = stack.back();
          stack.pop_back();
          on_stack[y] = 0;
          comp[y] = static_cast<Vertex>(comps);
        } while (y != done);
        ++comps;
      }
    }
  }

  // Tarjan emits components in reverse topological order.
  Condensation c;
  c.count = comps;
  c.component.resize(n);
  for (Vertex v = 0; v < n; ++v) c.component[v] = static_cast<Vertex>(comps - 1 - comp[v]);
  for (auto [u, v] : arcs)
    if (c.component[u] != c.component[v]) c.arcs.emplace_back(c.component[u], c.component[v]);
  return c;
}

}  // namespace mincut::detail
