#include "mincut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace mincut {

MultiGraph::MultiGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw std::invalid_argument("graph needs at least one vertex");
  bool identity = true;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n_ || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.id != i) identity = false;
  }
  if (!identity) {
    id_index_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i)
      id_index_.emplace_back(edges_[i].id, static_cast<std::uint32_t>(i));
    std::sort(id_index_.begin(), id_index_.end());
    for (std::size_t i = 1; i < id_index_.size(); ++i)
      if (id_index_[i].first == id_index_[i - 1].first)
        throw std::invalid_argument("duplicate edge id " + std::to_string(id_index_[i].first));
  }

  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[fill[e.u]++] = {e.v, static_cast<std::uint32_t>(i)};
    adjacency_[fill[e.v]++] = {e.u, static_cast<std::uint32_t>(i)};
  }
}

MultiGraph MultiGraph::from_pairs(std::size_t n,
                                  const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    edges.push_back({pairs[i].first, pairs[i].second, static_cast<EdgeId>(i)});
  return MultiGraph(n, std::move(edges));
}

const Edge& MultiGraph::edge_by_id(EdgeId id) const {
  if (id_index_.empty()) {
    if (id >= edges_.size()) throw std::out_of_range("no edge with id " + std::to_string(id));
    return edges_[id];
  }
  auto it = std::lower_bound(id_index_.begin(), id_index_.end(), std::make_pair(id, 0u));
  if (it == id_index_.end() || it->first != id)
    throw std::out_of_range("no edge with id " + std::to_string(id));
  return edges_[it->second];
}

bool MultiGraph::is_simple() const {
  std::vector<std::pair<Vertex, Vertex>> keys;
  keys.reserve(edges_.size());
  for (const Edge& e : edges_) keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

std::vector<Vertex> MultiGraph::components(std::size_t* count) const {
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> label(n_, kUnset);
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (Vertex root = 0; root < n_; ++root) {
    if (label[root] != kUnset) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : incident(x)) {
        if (label[inc.neighbor] == kUnset) {
          label[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

bool MultiGraph::is_connected() const {
  std::size_t count = 0;
  components(&count);
  return count == 1;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

MultiGraph parse_graph(std::string_view text, const ParseOptions& options) {
  std::size_t n = 0;
  std::size_t declared_m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 3) throw ParseError(line_no, "header must be 'p <n> <m>'");
      n = to_count(tokens[1], line_no);
      declared_m = to_count(tokens[2], line_no);
      if (n == 0) throw ParseError(line_no, "graph needs at least one vertex");
      have_header = true;
      edges.reserve(declared_m);
    } else if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (tokens.size() != 3) throw ParseError(line_no, "edge must be 'e <u> <v>'");
      std::size_t u = to_count(tokens[1], line_no);
      std::size_t v = to_count(tokens[2], line_no);
      if (u >= n || v >= n) throw ParseError(line_no, "vertex index out of range");
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      if (options.simple) {
        auto key = std::make_pair(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
        if (!seen.insert(key).second)
          throw ParseError(line_no, "duplicate edge " + std::to_string(key.first) + "-" +
                                        std::to_string(key.second));
      }
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<EdgeId>(edges.size())});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (edges.size() != declared_m)
    throw ParseError(line_no, "header declares " + std::to_string(declared_m) + " edges, found " +
                                  std::to_string(edges.size()));
  MultiGraph g(n, std::move(edges));
  if (options.require_connected && !g.is_connected())
    throw ParseError(line_no, "graph is not connected");
  return g;
}

std::string format_graph(const MultiGraph& g) {
  std::string out = "p " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e ";
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Contraction contract_by_map(const MultiGraph& g, std::span<const Vertex> label, std::size_t num_blocks) {
  if (label.size() != g.num_vertices()) throw std::invalid_argument("label size mismatch");
  for (Vertex l : label)
    if (l >= num_blocks) throw std::invalid_argument("label out of range");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (label[e.u] != label[e.v]) edges.push_back({label[e.u], label[e.v], e.id});
  return {MultiGraph(num_blocks, std::move(edges)), std::vector<Vertex>(label.begin(), label.end())};
}

Contraction contract(const MultiGraph& g, const std::vector<std::vector<Vertex>>& blocks) {
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> label(g.num_vertices(), kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block in partition");
    for (Vertex v : blocks[b]) {
      if (v >= g.num_vertices()) throw std::invalid_argument("block vertex out of range");
      if (label[v] != kUnset) throw std::invalid_argument("blocks overlap at vertex " + std::to_string(v));
      label[v] = static_cast<Vertex>(b);
    }
  }
  for (Vertex l : label)
    if (l == kUnset) throw std::invalid_argument("blocks do not cover every vertex");
  return contract_by_map(g, label, blocks.size());
}

namespace {

std::vector<char> membership(const MultiGraph& g, std::span<const Vertex> side) {
  std::vector<char> in(g.num_vertices(), 0);
  std::size_t count = 0;
  for (Vertex v : side) {
    if (v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
    if (!in[v]) ++count;
    in[v] = 1;
  }
  if (count == 0 || count == g.num_vertices())
    throw std::invalid_argument("cut side must be non-empty and proper");
  return in;
}

}  // namespace

std::size_t cut_size(const MultiGraph& g, std::span<const Vertex> side) {
  auto in = membership(g, side);
  std::size_t size = 0;
  for (const Edge& e : g.edges()) size += in[e.u] != in[e.v];
  return size;
}

EdgeCut crossing_edges(const MultiGraph& g, std::span<const Vertex> side) {
  auto in = membership(g, side);
  EdgeCut cut;
  for (const Edge& e : g.edges())
    if (in[e.u] != in[e.v]) cut.edges.push_back(e.id);
  std::sort(cut.edges.begin(), cut.edges.end());
  return cut;
}

std::size_t min_degree(const MultiGraph& g) {
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.num_vertices(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::vector<Vertex> canonical_side(std::size_t n, std::span<const Vertex> side) {
  std::vector<char> in(n, 0);
  for (Vertex v : side) in[v] = 1;
  const char keep = in[0] ? 0 : 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (in[v] == keep) out.push_back(v);
  return out;
}

Cut make_cut(const MultiGraph& g, std::span<const Vertex> side) {
  Cut cut;
  cut.size = cut_size(g, side);
  cut.side = canonical_side(g.num_vertices(), side);
  return cut;
}

std::string format_edge_cut(const MultiGraph& g, const EdgeCut& cut) {
  std::vector<std::pair<Vertex, Vertex>> tokens;
  tokens.reserve(cut.edges.size());
  for (EdgeId id : cut.edges) {
    const Edge& e = g.edge_by_id(id);
    tokens.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(tokens.begin(), tokens.end());
  std::string out = "c " + std::to_string(tokens.size());
  for (auto [u, v] : tokens) {
    out += ' ';
    out += std::to_string(u);
    out += '-';
    out += std::to_string(v);
  }
  return out;
}

std::vector<Vertex> side_of_edge_cut(const MultiGraph& g, const EdgeCut& cut) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!std::binary_search(cut.edges.begin(), cut.edges.end(), e.id)) kept.push_back(e);
  MultiGraph rest(g.num_vertices(), std::move(kept));
  std::size_t count = 0;
  auto label = rest.components(&count);
  if (count != 2) return {};
  std::vector<Vertex> side;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (label[v] != label[0]) side.push_back(v);
  return side;
}

}  // namespace mincut
