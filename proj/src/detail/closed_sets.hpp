#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut::detail {

/// Enumerates the closed sets of a DAG: vertex sets that contain s, miss t and
/// contain every successor of each member (arc u->v makes v a successor of u).
///
/// The search walks the lattice of closed sets one vertex at a time. The
/// visitor sees add(v) / remove(v) for every move and emit() once per closed
/// set, so it can maintain per-set data incrementally. Vertices outside every closed set (those reaching t) and
/// vertices inside every closed set (those reachable from s) are fixed; the
/// forced ones are announced through add() before the first emit().
template <class Visitor>
class ClosedSetEnumerator {
 public:
  ClosedSetEnumerator(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs, Vertex s, Vertex t)
      : n_(n), s_(s), t_(t), out_(n), in_(n) {
    for (auto [u, v] : arcs) {
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
  }

  void run(Visitor& visitor) {
    std::vector<char> forced_in(n_, 0), forced_out(n_, 0);
    flood(s_, out_, forced_in);
    flood(t_, in_, forced_out);
    for (Vertex v = 0; v < n_; ++v)
      if (forced_in[v] && forced_out[v]) return;  // s reaches t: no closed set

    // Linear extension with successors first (Kahn on out-degrees).
    std::vector<std::size_t> pending(n_);
    std::vector<Vertex> ready, order;
    for (Vertex v = 0; v < n_; ++v) {
      pending[v] = out_[v].size();
      if (pending[v] == 0) ready.push_back(v);
    }
    std::vector<Vertex> linear;
    for (std::size_t i = 0; i < ready.size(); ++i) {
      Vertex v = ready[i];
      linear.push_back(v);
      for (Vertex u : in_[v])
        if (--pending[u] == 0) ready.push_back(u);
    }
    if (linear.size() != n_) throw std::logic_error("closed-set enumeration on a cyclic graph");

    member_.assign(n_, 0);
    free_.clear();
    for (Vertex v : linear) {
      if (forced_in[v]) {
        member_[v] = 1;
        visitor.add(v);
      } else if (!forced_out[v]) {
        free_.push_back(v);
      }
    }
    recurse(0, visitor);
  }

 private:
  static void flood(Vertex from, const std::vector<std::vector<Vertex>>& adj, std::vector<char>& seen) {
    std::vector<Vertex> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  }

  void recurse(std::size_t start, Visitor& visitor) {
    visitor.emit();
    for (std::size_t j = start; j < free_.size(); ++j) {
      Vertex v = free_[j];
      bool addable = true;
      for (Vertex w : out_[v])
        if (!member_[w]) {
          addable = false;
          break;
        }
      if (!addable) continue;
      member_[v] = 1;
      visitor.add(v);
      recurse(j + 1, visitor);
      visitor.remove(v);
      member_[v] = 0;
    }
  }

  std::size_t n_;
  Vertex s_, t_;
  std::vector<std::vector<Vertex>> out_, in_;
  std::vector<char> member_;
  std::vector<Vertex> free_;
};

/// Visitor collecting every closed set as a membership vector.
struct CollectClosedSets {
  explicit CollectClosedSets(std::size_t n) : current(n, 0) {}
  void add(Vertex v) { current[v] = 1; }
  void remove(Vertex v) { current[v] = 0; }
  void emit() { sets.push_back(current); }
  std::vector<char> current;
  std::vector<std::vector<char>> sets;
};

}  // namespace mincut::detail
