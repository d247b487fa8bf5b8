#include "mincut/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <boost/dynamic_bitset.hpp>
#include <chrono>
#include <mutex>
#include <thread>

#include "detail/closed_sets.hpp"
#include "detail/flow.hpp"
#include "detail/weighted_graph.hpp"

namespace mincut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::vector<Node>> cactus_adjacency(const Cactus& kc) {
  std::vector<std::vector<Node>> adj(kc.num_nodes());
  for (const auto& cyc : kc.cycles())
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Node a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  return adj;
}

// Visitor keeping the embedded arcs with exactly one end in the current set.
class CrossingTracker {
 public:
  CrossingTracker(const CutDag& dag, const CutSink& sink)
      : dag_(dag), sink_(sink), incident_(dag.num_vertices), member_(dag.num_vertices, 0),
        position_(dag.embedded.size(), kAbsent) {
    for (std::size_t i = 0; i < dag.embedded.size(); ++i) {
      incident_[dag.embedded[i].from].push_back(i);
      incident_[dag.embedded[i].to].push_back(i);
    }
  }

  void add(Vertex v) { move(v, 1); }
  void remove(Vertex v) { move(v, 0); }
  void emit() {
    EdgeCut cut;
    cut.edges.reserve(crossing_.size());
    for (std::size_t i : crossing_) cut.edges.push_back(dag_.embedded[i].edge);
    std::sort(cut.edges.begin(), cut.edges.end());
    ++emitted_;
    sink_(cut);
  }
  std::size_t emitted() const { return emitted_; }

 private:
  static constexpr std::size_t kAbsent = ~std::size_t{0};

  void move(Vertex v, char now) {
    member_[v] = now;
    for (std::size_t i : incident_[v]) {
      const auto& arc = dag_.embedded[i];
      const Vertex other = arc.from == v ? arc.to : arc.from;
      if (member_[other] != now) {
        insert(i);
      } else {
        erase(i);
      }
    }
  }
  void insert(std::size_t i) {
    position_[i] = crossing_.size();
    crossing_.push_back(i);
  }
  void erase(std::size_t i) {
    const std::size_t p = position_[i];
    crossing_[p] = crossing_.back();
    position_[crossing_[p]] = p;
    crossing_.pop_back();
    position_[i] = kAbsent;
  }

  const CutDag& dag_;
  const CutSink& sink_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<char> member_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> crossing_;
  std::size_t emitted_ = 0;
};

}  // namespace

std::vector<CutDag> build_d1(const Cactus& k1) {
  std::vector<CutDag> out;
  for (std::size_t c = 0; c < k1.cycles().size(); ++c) {
    const auto& cyc = k1.cycles()[c];
    if (cyc.size() != 2) continue;
    CutDag dag;
    dag.num_vertices = 2;
    dag.s = 0;
    dag.t = 1;
    dag.arcs = {{1, 0}};
    dag.rho.assign(k1.num_nodes(), 1);
    for (Node x : side_of_cycle(k1, c, cyc[1])) dag.rho[x] = 0;
    out.push_back(std::move(dag));
  }
  return out;
}

TwoCycleContraction contract_2cycles(const Cactus& k1) {
  detail::UnionFind uf(k1.num_nodes());
  for (const auto& cyc : k1.cycles())
    if (cyc.size() == 2) uf.unite(cyc[0], cyc[1]);
  std::size_t count = 0;
  std::vector<Node> map = uf.labels(&count);
  std::vector<std::vector<Node>> cycles;
  for (const auto& cyc : k1.cycles()) {
    if (cyc.size() == 2) continue;
    std::vector<Node> next;
    for (Node v : cyc) next.push_back(map[v]);
    cycles.push_back(std::move(next));
  }
  std::vector<Node> phi;
  for (Node v : k1.phi()) phi.push_back(map[v]);
  return {Cactus(count, std::move(cycles), std::move(phi)), std::move(map)};
}

std::vector<CutDag> build_d2(const Cactus& k2, const std::vector<Node>& node_map,
                             const std::vector<std::size_t>& k1_preimage_sizes) {
  const std::size_t n2 = k2.num_nodes();
  std::vector<std::size_t> weight(n2, 0);
  for (std::size_t x = 0; x < node_map.size(); ++x) weight[node_map[x]] += k1_preimage_sizes[x];

  // Breadth-first order of the non-empty nodes.
  const auto adj = cactus_adjacency(k2);
  Node root = 0;
  while (root < n2 && weight[root] == 0) ++root;
  std::vector<Node> order;
  if (root < n2) {
    std::vector<char> seen(n2, 0);
    std::vector<Node> queue{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Node x = queue[i];
      if (weight[x] > 0) order.push_back(x);
      for (Node y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
    }
  }

  std::vector<CutDag> out;
  std::vector<char> in_prefix(n2, 0);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    in_prefix[order[i]] = 1;
    const Node target = order[i + 1];
    std::vector<Vertex> label(n2);
    Vertex next = 1;
    for (Node x = 0; x < n2; ++x) label[x] = in_prefix[x] ? 0 : next++;
    detail::FlowNetwork net(next);
    for (const auto& cyc : k2.cycles())
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        const Vertex a = label[cyc[j]], b = label[cyc[(j + 1) % cyc.size()]];
        if (a != b) net.add_edge(a, b, 1, 1);
      }
    if (net.max_flow(0, label[target], 3) != 2) continue;
    const auto cond = detail::condense(next, net.residual_arcs());

    std::vector<std::size_t> comp_weight(cond.count, 0);
    for (Node x = 0; x < n2; ++x) comp_weight[cond.component[label[x]]] += weight[x];
    std::vector<Vertex> renumber(cond.count, CutDag::kNoVertex);
    Vertex kept = 0;
    for (std::size_t c = 0; c < cond.count; ++c)
      if (comp_weight[c] > 0) renumber[c] = kept++;

    // Arcs between non-empty components, bridging over empty ones.
    std::vector<std::vector<Vertex>> succ(cond.count);
    for (auto [u, v] : cond.arcs) succ[u].push_back(v);
    CutDag dag;
    dag.num_vertices = kept;
    dag.s = renumber[cond.component[0]];
    dag.t = renumber[cond.component[label[target]]];
    std::vector<std::size_t> stamp(cond.count, ~std::size_t{0});
    for (std::size_t u = 0; u < cond.count; ++u) {
      if (renumber[u] == CutDag::kNoVertex) continue;
      stamp[u] = u;
      std::vector<Vertex> stack(succ[u].begin(), succ[u].end());
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        if (stamp[v] == u) continue;
        stamp[v] = u;
        if (renumber[v] != CutDag::kNoVertex) {
          dag.arcs.emplace_back(renumber[u], renumber[v]);
        } else {
          stack.insert(stack.end(), succ[v].begin(), succ[v].end());
        }
      }
    }
    std::sort(dag.arcs.begin(), dag.arcs.end());
    dag.rho.resize(node_map.size());
    for (std::size_t x = 0; x < node_map.size(); ++x)
      dag.rho[x] = renumber[cond.component[label[node_map[x]]]];
    out.push_back(std::move(dag));
  }
  return out;
}

CutDag embed_edges(const CutDag& a, const MultiGraph& h) {
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  const std::size_t n = a.num_vertices;
  std::vector<std::vector<Vertex>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [u, v] : a.arcs) {
    succ[u].push_back(v);
    ++indegree[v];
  }
  std::vector<Vertex> topo;
  for (Vertex v = 0; v < n; ++v)
    if (indegree[v] == 0) topo.push_back(v);
  for (std::size_t i = 0; i < topo.size(); ++i)
    for (Vertex w : succ[topo[i]])
      if (--indegree[w] == 0) topo.push_back(w);
  if (topo.size() != n) throw EmbeddingError("DAG has a cycle");
  std::vector<Bits> reach(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    reach[*it].set(*it);
    for (Vertex w : succ[*it]) reach[*it] |= reach[w];
  }

  CutDag out = a;
  out.embedded.clear();
  if (h.num_vertices() != a.rho.size()) throw EmbeddingError("sparsifier does not match the DAG mapping");
  for (const Edge& e : h.edges()) {
    const Vertex x = a.rho[e.u], y = a.rho[e.v];
    if (x == CutDag::kNoVertex || y == CutDag::kNoVertex)
      throw EmbeddingError("edge " + std::to_string(e.id) + " ends at an empty cactus node");
    if (x == y) continue;
    if (reach[x].test(y)) {
      out.embedded.push_back({x, y, e.id});
    } else if (reach[y].test(x)) {
      out.embedded.push_back({y, x, e.id});
    } else {
      throw EmbeddingError("edge " + std::to_string(e.id) + " joins incomparable DAG vertices");
    }
  }
  return out;
}

std::vector<std::vector<char>> list_closed_sets(const CutDag& a, bool use_embedded) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  if (use_embedded) {
    for (const auto& e : a.embedded) arcs.emplace_back(e.from, e.to);
  } else {
    arcs = a.arcs;
  }
  detail::CollectClosedSets collect(a.num_vertices);
  detail::ClosedSetEnumerator<detail::CollectClosedSets>(a.num_vertices, arcs, a.s, a.t).run(collect);
  return std::move(collect.sets);
}

std::size_t enumerate_closed_sets(const CutDag& embedded, const CutSink& sink) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(embedded.embedded.size());
  for (const auto& e : embedded.embedded) arcs.emplace_back(e.from, e.to);
  CrossingTracker tracker(embedded, sink);
  detail::ClosedSetEnumerator<CrossingTracker>(embedded.num_vertices, arcs, embedded.s, embedded.t).run(tracker);
  return tracker.emitted();
}

Analysis analyze(const MultiGraph& g) {
  if (g.num_vertices() < 2) throw std::invalid_argument("min-cuts need at least two vertices");
  if (!g.is_connected()) throw std::invalid_argument("graph is disconnected");
  Analysis a;
  a.n = g.num_vertices();
  a.m = g.num_edges();
  a.delta = min_degree(g);

  auto start = Clock::now();
  const MultiGraph certificate = sparse_certificate(g, a.delta + 1);
  a.timings.certificate = seconds_since(start);

  start = Clock::now();
  a.lambda = edge_connectivity(certificate);
  a.timings.connectivity = seconds_since(start);

  start = Clock::now();
  a.reduced = reduce_preserving_min_cuts(certificate, a.lambda);
  a.timings.reduction = seconds_since(start);

  start = Clock::now();
  a.reduced_cuts = min_cut_family(a.reduced.graph, a.lambda);
  a.timings.family = seconds_since(start);

  start = Clock::now();
  a.cactus = build_cactus(a.reduced.graph, a.reduced_cuts).pull_back(a.reduced.vertex_map);
  a.timings.cactus = seconds_since(start);

  start = Clock::now();
  a.compact = compact_cactus(a.cactus, &a.compaction);
  a.timings.compact = seconds_since(start);

  start = Clock::now();
  a.sparsifier = sparsify(g, a.compact);
  a.timings.sparsify = seconds_since(start);
  return a;
}

std::vector<Cut> all_min_cuts(const MultiGraph& g, const Analysis& a) {
  std::vector<Cut> out;
  const std::size_t r = a.reduced.graph.num_vertices();
  for (const Cut& c : a.reduced_cuts) {
    std::vector<char> in(r, 0);
    for (Vertex x : c.side) in[x] = 1;
    std::vector<Vertex> side;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (in[a.reduced.vertex_map[v]]) side.push_back(v);
    out.push_back({canonical_side(g.num_vertices(), side), c.size});
  }
  std::sort(out.begin(), out.end());
  return out;
}

EnumerationSummary enumerate_min_cuts(const MultiGraph& g, Analysis& a, const CutSink& sink,
                                      const EnumerationOptions& options) {
  EnumerationSummary summary;
  const Cactus& k1 = a.compact;
  const MultiGraph& h = a.sparsifier.graph;

  auto start = Clock::now();
  std::vector<CutDag> dags = build_d1(k1);
  summary.d1_dags = dags.size();
  const TwoCycleContraction k2 = contract_2cycles(k1);
  std::vector<std::size_t> sizes(k1.num_nodes());
  for (Node x = 0; x < k1.num_nodes(); ++x) sizes[x] = k1.preimage_size(x);
  for (CutDag& d : build_d2(k2.cactus, k2.node_map, sizes)) dags.push_back(std::move(d));
  summary.d2_dags = dags.size() - summary.d1_dags;
  a.timings.dags = seconds_since(start);

  const std::size_t n = g.num_vertices();
  std::vector<char> trivial_seen(n, 0);
  auto forward = [&](const EdgeCut& cut) {
    if (cut.edges.size() != a.lambda)
      throw std::logic_error("closed set crosses " + std::to_string(cut.edges.size()) + " edges, expected " +
                             std::to_string(a.lambda));
    const Edge& first = g.edge_by_id(cut.edges.front());
    for (Vertex v : {first.u, first.v}) {
      if (g.degree(v) != a.lambda) continue;
      const bool all_at_v = std::all_of(cut.edges.begin(), cut.edges.end(), [&](EdgeId id) {
        const Edge& e = g.edge_by_id(id);
        return e.u == v || e.v == v;
      });
      if (all_at_v) {
        trivial_seen[v] = 1;
        if (n == 2) trivial_seen[0] = trivial_seen[1] = 1;
        ++summary.trivial;
        break;
      }
    }
    ++summary.total;
    sink(cut);
  };

  if (options.threads <= 1 || dags.size() <= 1) {
    for (const CutDag& dag : dags) {
      start = Clock::now();
      const CutDag embedded = embed_edges(dag, h);
      a.timings.embed += seconds_since(start);
      start = Clock::now();
      enumerate_closed_sets(embedded, forward);
      a.timings.enumerate += seconds_since(start);
    }
  } else {
    // Workers fill one buffer per DAG; the buffers are replayed in DAG order
    // so the output matches the sequential run.
    start = Clock::now();
    std::vector<std::vector<EdgeCut>> buffers(dags.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < dags.size();) {
        try {
          const CutDag embedded = embed_edges(dags[i], h);
          enumerate_closed_sets(embedded, [&](const EdgeCut& c) { buffers[i].push_back(c); });
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned workers = std::min<std::size_t>(options.threads, dags.size());
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    for (auto& buffer : buffers) {
      for (const EdgeCut& c : buffer) forward(c);
      buffer.clear();
      buffer.shrink_to_fit();
    }
    a.timings.enumerate = seconds_since(start);
  }

  start = Clock::now();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != a.lambda || trivial_seen[v]) continue;
    if (n == 2 && v == 0) continue;
    std::vector<Vertex> side{v};
    EdgeCut cut = crossing_edges(g, side);
    trivial_seen[v] = 1;
    ++summary.trivial;
    ++summary.total;
    sink(cut);
  }
  a.timings.trivial = seconds_since(start);
  summary.non_trivial = summary.total - summary.trivial;
  return summary;
}

EnumerationSummary enumerate_all_min_cuts(const MultiGraph& g, const CutSink& sink,
                                          const EnumerationOptions& options) {
  Analysis a = analyze(g);
  return enumerate_min_cuts(g, a, sink, options);
}

}  // namespace mincut
