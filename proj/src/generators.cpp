#include "hyperq/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hyperq/error.hpp"

namespace hyperq {

Hypergraph random_connected_3graph(std::size_t n, double density, std::mt19937_64& rng) {
  if (n < 3) throw Error(ErrorKind::ArgumentRange, "random connected 3-graph needs n >= 3");
  std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
  std::set<std::vector<Vertex>> edges;
  edges.insert({0, 1, 2});
  for (Vertex v = 3; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    Vertex a = pick(rng);
    Vertex b = pick(rng);
    while (b == a) b = pick(rng);
    std::vector<Vertex> e{a, b, v};
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      for (Vertex k = j + 1; k < n; ++k) {
        if (keep(rng)) edges.insert({i, j, k});
      }
    }
  }
  return Hypergraph(3, n, {edges.begin(), edges.end()});
}

Hypergraph random_two_colorable(std::size_t n, double density, std::mt19937_64& rng) {
  if (n < 3) throw Error(ErrorKind::ArgumentRange, "random 2-colorable 3-graph needs n >= 3");
  std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
  std::vector<std::uint8_t> side(n, 0);
  std::uniform_int_distribution<std::size_t> size_dist(1, n - 1);
  const std::size_t a = size_dist(rng);
  std::fill(side.begin() + static_cast<std::ptrdiff_t>(a), side.end(), 1);
  std::shuffle(side.begin(), side.end(), rng);
  std::vector<std::vector<Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      for (Vertex k = j + 1; k < n; ++k) {
        const int ones = side[i] + side[j] + side[k];
        if (ones != 0 && ones != 3 && keep(rng)) edges.push_back({i, j, k});
      }
    }
  }
  return Hypergraph(3, n, edges);
}

Hypergraph permuted(const Hypergraph& h, std::mt19937_64& rng) {
  std::vector<Vertex> label(h.n());
  std::iota(label.begin(), label.end(), 0u);
  std::shuffle(label.begin(), label.end(), rng);
  auto edges = h.edge_list();
  for (auto& e : edges) {
    for (Vertex& v : e) v = label[v];
  }
  return Hypergraph(h.r(), h.n(), edges);
}

}  // namespace hyperq
