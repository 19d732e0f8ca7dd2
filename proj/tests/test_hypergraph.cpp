#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hyperq/error.hpp"
#include "hyperq/generators.hpp"
#include "hyperq/hypergraph.hpp"

using namespace hyperq;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

// Counts r-subsets by multiplication, independent of the library helper.
long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long double num = 1;
  for (long long i = 0; i < k; ++i) num = num * (n - i) / (i + 1);
  return static_cast<long long>(num + 0.5L);
}

Hypergraph random_hypergraph(int r, std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<std::vector<Vertex>> edges;
  if (n >= static_cast<std::size_t>(r)) {
    for (const auto& e : build_complete(n, r).edge_list()) {
      if (keep(rng)) edges.push_back(e);
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Hypergraph(r, n, edges);
}

void check_incidence(const Hypergraph& h) {
  std::size_t total = 0;
  for (Vertex v = 0; v < h.n(); ++v) {
    total += h.degree(v);
    CHECK(h.incident(v).size() == h.degree(v));
    for (auto id : h.incident(v)) {
      auto e = h.edge(id);
      CHECK(std::find(e.begin(), e.end(), v) != e.end());
    }
  }
  CHECK(total == static_cast<std::size_t>(h.r()) * h.num_edges());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    for (Vertex v : h.edge(i)) {
      auto inc = h.incident(v);
      CHECK(std::find(inc.begin(), inc.end(), i) != inc.end());
    }
  }
}

}  // namespace

TEST_CASE("construction validates edges") {
  Hypergraph single(3, 3, {{0, 1, 2}});
  CHECK(single.num_edges() == 1);
  for (Vertex v = 0; v < 3; ++v) CHECK(single.degree(v) == 1);

  CHECK(kind_of([] { Hypergraph(3, 3, {{0, 1, 1}}); }) == ErrorKind::EdgeArity);
  CHECK(kind_of([] { Hypergraph(3, 3, {{0, 1}}); }) == ErrorKind::EdgeArity);
  CHECK(kind_of([] { Hypergraph(3, 3, {{0, 1, 3}}); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { Hypergraph(3, 4, {{0, 1, 2}, {2, 0, 1}}); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { Hypergraph(1, 4); }) == ErrorKind::ArgumentRange);

  Hypergraph unsorted(3, 5, {{4, 0, 2}});
  auto e = unsorted.edge(0);
  CHECK(std::vector<Vertex>(e.begin(), e.end()) == std::vector<Vertex>{0, 2, 4});
  CHECK(unsorted.has_edge(std::vector<Vertex>{0, 2, 4}));
  CHECK_FALSE(unsorted.has_edge(std::vector<Vertex>{0, 2, 3}));
}

TEST_CASE("fano plane") {
  const Hypergraph fano = build_fano();
  CHECK(fano.n() == 7);
  CHECK(fano.num_edges() == 7);
  for (Vertex v = 0; v < 7; ++v) CHECK(fano.degree(v) == 3);
  const auto edges = fano.edge_list();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      std::vector<Vertex> common;
      std::set_intersection(edges[i].begin(), edges[i].end(), edges[j].begin(), edges[j].end(),
                            std::back_inserter(common));
      CHECK(common.size() == 1);
    }
  }
  const std::set<std::vector<Vertex>> expected{{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {0, 3, 6},
                                               {1, 4, 6}, {2, 5, 6}, {1, 3, 5}};
  CHECK(std::set<std::vector<Vertex>>(edges.begin(), edges.end()) == expected);
}

TEST_CASE("complete r-graphs") {
  const Hypergraph k43 = build_complete(4, 3);
  CHECK(k43.num_edges() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(k43.degree(v) == 3);
  CHECK(build_complete(3, 3).num_edges() == 1);
  CHECK(build_complete(7, 3).num_edges() == 35);
  CHECK(build_complete(6, 4).num_edges() == 15);
  CHECK(min_degree(build_complete(6, 4)) == 10);
  CHECK(kind_of([] { build_complete(2, 3); }) == ErrorKind::ArgumentRange);
}

TEST_CASE("two-part complete and B_n") {
  CHECK(build_two_part_complete(2, 2).first == build_complete(4, 3));

  auto [h44, c44] = build_two_part_complete(4, 4);
  CHECK(h44.num_edges() == 48);
  for (Vertex v = 0; v < 8; ++v) CHECK(h44.degree(v) == 18);
  CHECK(is_proper_coloring(h44, c44));
  CHECK(c44.part_sizes == std::pair<std::size_t, std::size_t>{4, 4});

  auto [h12, c12] = build_two_part_complete(1, 2);
  CHECK(h12 == Hypergraph(3, 3, {{0, 1, 2}}));

  CHECK(kind_of([] { build_two_part_complete(0, 3); }) == ErrorKind::ArgumentRange);
  CHECK(kind_of([] { build_two_part_complete(1, 1); }) == ErrorKind::ArgumentRange);

  CHECK(build_bn(8).first.num_edges() == 48);
  CHECK(build_bn(9).first.num_edges() == 70);
  CHECK(build_bn(4).first == build_complete(4, 3));
  CHECK(build_bn(9).second.part_sizes == std::pair<std::size_t, std::size_t>{5, 4});
  CHECK(kind_of([] { build_bn(2); }) == ErrorKind::ArgumentRange);
}

TEST_CASE("B_n edge count and part degrees follow the closed forms") {
  for (std::size_t n = 3; n <= 60; ++n) {
    auto [h, coloring] = build_bn(n);
    const auto big = static_cast<long long>((n + 1) / 2);
    const auto small = static_cast<long long>(n / 2);
    const auto nn = static_cast<long long>(n);
    CHECK(static_cast<long long>(h.num_edges()) == choose(nn, 3) - choose(big, 3) - choose(small, 3));
    CHECK(static_cast<long long>(h.degree(0)) == choose(nn - 1, 2) - choose(big - 1, 2));
    CHECK(is_proper_coloring(h, coloring));
  }
}

TEST_CASE("expansion") {
  const Hypergraph tri = build_expansion({{0, 1}, {1, 2}, {0, 2}}, 3, 3);
  CHECK(tri.n() == 6);
  CHECK(tri.num_edges() == 3);
  for (Vertex v = 0; v < 3; ++v) CHECK(tri.degree(v) == 2);
  for (Vertex v = 3; v < 6; ++v) CHECK(tri.degree(v) == 1);

  const Hypergraph same = build_expansion({{0, 1}, {1, 2}, {2, 3}}, 4, 2);
  CHECK(same == Hypergraph(2, 4, {{0, 1}, {1, 2}, {2, 3}}));

  const Hypergraph one = build_expansion({{0, 1}}, 2, 4);
  CHECK(one == Hypergraph(4, 4, {{0, 1, 2, 3}}));

  CHECK(kind_of([] { build_expansion({{0, 1}, {1, 0}}, 2, 3); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { build_expansion({{0, 5}}, 3, 3); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("components") {
  auto fano_parts = components(build_fano());
  REQUIRE(fano_parts.size() == 1);
  CHECK(fano_parts[0].size() == 7);

  auto two = components(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}}));
  CHECK(two == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}});

  auto isolated = components(Hypergraph(3, 4, {{0, 1, 2}}));
  CHECK(isolated == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3}});

  auto interleaved = components(Hypergraph(3, 7, {{1, 3, 5}, {0, 2, 6}}));
  CHECK(interleaved == std::vector<std::vector<Vertex>>{{0, 2, 6}, {1, 3, 5}, {4}});
}

TEST_CASE("components form a partition that respects edges") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const Hypergraph h = random_hypergraph(3, n, 0.04, rng);
    const auto parts = components(h);
    std::vector<int> owner(n, -1);
    for (std::size_t c = 0; c < parts.size(); ++c) {
      CHECK(std::is_sorted(parts[c].begin(), parts[c].end()));
      if (c > 0) CHECK(parts[c - 1].front() < parts[c].front());
      for (Vertex v : parts[c]) {
        CHECK(owner[v] == -1);
        owner[v] = static_cast<int>(c);
      }
    }
    CHECK(std::count(owner.begin(), owner.end(), -1) == 0);
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      auto e = h.edge(i);
      for (Vertex v : e) CHECK(owner[v] == owner[e[0]]);
    }
  }
}

TEST_CASE("minimum degree") {
  CHECK(min_degree(build_bn(8).first) == 18);
  CHECK(min_degree(build_fano()) == 3);
  CHECK(min_degree(Hypergraph(3, 4, {{0, 1, 2}})) == 0);
  CHECK(kind_of([] { min_degree(Hypergraph(3, 0)); }) == ErrorKind::EmptyVertexSet);
}

TEST_CASE("incidence index is consistent") {
  std::mt19937_64 rng(5);
  check_incidence(build_fano());
  check_incidence(build_bn(11).first);
  for (int trial = 0; trial < 20; ++trial) {
    check_incidence(random_hypergraph(2 + trial % 3, 8, 0.3, rng));
  }
}

TEST_CASE("vertex and edge deletion") {
  const Hypergraph k5 = build_complete(5, 3);
  const Hypergraph minus = k5.without_vertex(2);
  CHECK(minus == build_complete(4, 3));
  const Hypergraph fewer = k5.without_edge(0);
  CHECK(fewer.num_edges() == 9);
  CHECK(fewer.n() == 5);

  const Hypergraph path(3, 5, {{0, 1, 2}, {2, 3, 4}});
  CHECK(path.without_vertex(2) == Hypergraph(3, 4));
  CHECK(path.without_vertex(0) == Hypergraph(3, 4, {{1, 2, 3}}));
}

TEST_CASE("text format") {
  const Hypergraph single = parse("3 3 1\n0 1 2\n");
  CHECK(single == Hypergraph(3, 3, {{0, 1, 2}}));

  const std::string fano_text = serialize(build_fano());
  CHECK(fano_text.rfind("3 7 7\n", 0) == 0);
  CHECK(std::count(fano_text.begin(), fano_text.end(), '\n') == 8);
  CHECK(fano_text.find("0 1 2\n0 3 6\n0 4 5\n1 3 5\n") != std::string::npos);

  CHECK(parse("# comment\n\n3 4 1\n  # another\n0 1 3") == Hypergraph(3, 4, {{0, 1, 3}}));
  CHECK(parse("2 3 0\n") == Hypergraph(2, 3));

  CHECK(kind_of([] { parse("3 3 1\n0 1\n"); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { parse("3 3\n0 1 2\n"); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { parse("3 3 2\n0 1 2\n"); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { parse("3 3 1\n0 1 x\n"); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { parse(""); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { parse("3 3 1\n0 1 7\n"); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { parse("3 4 2\n0 1 2\n2 1 0\n"); }) == ErrorKind::DuplicateEdge);
}

TEST_CASE("parse inverts serialize") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = 2 + trial % 3;
    const std::size_t n = static_cast<std::size_t>(r) + static_cast<std::size_t>(trial % 7);
    const Hypergraph h = random_hypergraph(r, n, 0.4, rng);
    const Hypergraph back = parse(serialize(h));
    CHECK(back == h);
    CHECK(serialize(back) == serialize(h));
  }
}

TEST_CASE("random generators") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 3; n <= 12; ++n) {
    CHECK(is_connected(random_connected_3graph(n, 0.1, rng)));
    const Hypergraph g = random_two_colorable(n, 0.7, rng);
    CHECK(g.n() == n);
  }
  const Hypergraph fano = build_fano();
  const Hypergraph shuffled = permuted(fano, rng);
  CHECK(shuffled.num_edges() == 7);
  for (Vertex v = 0; v < 7; ++v) CHECK(shuffled.degree(v) == 3);
}
