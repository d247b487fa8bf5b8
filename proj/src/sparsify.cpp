#include "mincut/sparsify.hpp"

namespace mincut {

Sparsifier sparsify(const MultiGraph& g, const Cactus& kprime) {
  if (kprime.num_graph_vertices() != g.num_vertices())
    throw std::invalid_argument("cactus mapping does not match the graph");
  Contraction c = contract_by_map(g, kprime.phi(), kprime.num_nodes());
  return {std::move(c.graph), std::move(c.vertex_map)};
}

SparsifierReport verify_sparsifier(const MultiGraph& g, const MultiGraph& h, const std::vector<Vertex>& vertex_map,
                                   const std::vector<Cut>& cuts, std::size_t lambda) {
  SparsifierReport r;
  r.vertices = h.num_vertices();
  r.edges = h.num_edges();
  r.edge_bound = r.vertices == 0 ? 0 : lambda * (r.vertices - 1);
  r.edge_bound_ok = r.edges <= r.edge_bound;
  if (vertex_map.size() != g.num_vertices()) {
    r.violations.push_back("vertex map does not cover the graph");
    return r;
  }
  for (const Cut& cut : cuts) {
    std::vector<char> in_side(g.num_vertices(), 0);
    for (Vertex v : cut.side) in_side[v] = 1;
    // Block -> 0 unseen, 1 inside, 2 outside, 3 split.
    std::vector<char> block(h.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) block[vertex_map[v]] |= in_side[v] ? 1 : 2;
    std::vector<Vertex> image;
    bool split = false;
    for (Vertex x = 0; x < h.num_vertices(); ++x) {
      if (block[x] == 3) split = true;
      if (block[x] == 1) image.push_back(x);
    }
    std::string name = "cut of size " + std::to_string(cut.side.size()) + " starting at " + std::to_string(cut.side[0]);
    if (split) {
      r.violations.push_back(name + " splits a contracted block");
      continue;
    }
    const std::size_t size = cut_size(h, image);
    if (size != lambda) r.violations.push_back(name + " has size " + std::to_string(size) + " in H");
  }
  return r;
}

}  // namespace mincut
