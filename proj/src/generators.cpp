#include "mincut/generators.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mincut {

namespace {

void add_clique(std::vector<std::pair<Vertex, Vertex>>& pairs, Vertex first, std::size_t size) {
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a + 1; b < size; ++b)
      pairs.emplace_back(static_cast<Vertex>(first + a), static_cast<Vertex>(first + b));
}

// The standard distributions are implementation-defined, so the mapping from
// engine output to numbers is fixed here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t bound) {
    return static_cast<std::size_t>(unit() * static_cast<double>(bound));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

MultiGraph tightness_graph(std::size_t n, std::size_t delta, std::size_t lambda) {
  if (delta < 2) throw std::invalid_argument("tightness graph needs delta >= 2");
  if (lambda < 2 || lambda % 2 != 0) throw std::invalid_argument("tightness graph needs an even lambda >= 2");
  if (2 * lambda > delta) throw std::invalid_argument("tightness graph needs lambda <= delta/2");
  if (n % (delta + 1) != 0) throw std::invalid_argument("tightness graph needs (delta+1) to divide n");
  const std::size_t r = n / (delta + 1);
  if (r < 3) throw std::invalid_argument("tightness graph needs n >= 3(delta+1)");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(r * (delta + 1) * delta / 2 + r * lambda / 2);
  for (std::size_t i = 0; i < r; ++i) add_clique(pairs, static_cast<Vertex>(i * (delta + 1)), delta + 1);
  for (std::size_t j = 0; j < lambda / 2; ++j)
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t next = (i + 1) % r;
      Vertex a = static_cast<Vertex>(i * (delta + 1) + j), b = static_cast<Vertex>(next * (delta + 1) + j);
      pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
  return MultiGraph::from_pairs(n, pairs);
}

MultiGraph disjoint_cliques(std::size_t n, std::size_t delta) {
  if (delta + 1 == 0 || n % (delta + 1) != 0 || n == 0)
    throw std::invalid_argument("disjoint cliques need (delta+1) to divide n");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n / (delta + 1); ++i) add_clique(pairs, static_cast<Vertex>(i * (delta + 1)), delta + 1);
  return MultiGraph::from_pairs(n, pairs);
}

MultiGraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  pairs.emplace_back(0, static_cast<Vertex>(n - 1));
  return MultiGraph::from_pairs(n, pairs);
}

MultiGraph clique(std::size_t k) {
  if (k == 0) throw std::invalid_argument("clique needs k >= 1");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  add_clique(pairs, 0, k);
  return MultiGraph::from_pairs(k, pairs);
}

MultiGraph random_connected(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<char> adjacent(n * n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    Vertex a = order[i], b = order[rng.below(i)];
    adjacent[a * n + b] = adjacent[b * n + a] = 1;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (adjacent[a * n + b] || rng.unit() < p) pairs.emplace_back(a, b);
  return MultiGraph::from_pairs(n, pairs);
}

}  // namespace mincut
