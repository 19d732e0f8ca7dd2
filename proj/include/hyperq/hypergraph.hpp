#pragma once

// r-uniform hypergraphs on vertices 0..n-1, their standard constructions and
// a plain-text serialization.
//
// File format:
//   r n m
//   v_1 ... v_r      (m lines, 0-based vertex ids)
// Lines starting with '#' and blank lines are ignored.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperq {

using Vertex = std::uint32_t;

class Hypergraph {
 public:
  /// Validates and indexes the edge list. Each edge is sorted; the edge order
  /// is preserved. Throws Error{EdgeArity | VertexOutOfRange | DuplicateEdge |
  /// ArgumentRange}.
  Hypergraph(int r, std::size_t n, const std::vector<std::vector<Vertex>>& edges);

  /// Edgeless r-graph on n vertices.
  Hypergraph(int r, std::size_t n);

  int r() const noexcept { return r_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return num_edges_; }

  /// Sorted vertex tuple of edge i.
  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
  }

  /// Indices of the edges containing v.
  std::span<const std::uint32_t> incident(Vertex v) const {
    return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Membership test for a sorted r-tuple.
  bool has_edge(std::span<const Vertex> sorted_edge) const;

  std::vector<std::vector<Vertex>> edge_list() const;

  /// Edges in lexicographic order.
  std::vector<std::vector<Vertex>> sorted_edge_list() const;

  /// Sub-hypergraph induced on `vertices` (given in the order of the new
  /// labels 0..k-1). Only edges lying entirely inside the set survive.
  Hypergraph induced(std::span<const Vertex> vertices) const;

  /// Removes w and its incident edges; remaining vertices are relabeled
  /// contiguously preserving order.
  Hypergraph without_vertex(Vertex w) const;

  /// Copy with edge i removed.
  Hypergraph without_edge(std::size_t i) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  void index();

  int r_ = 2;
  std::size_t n_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<Vertex> flat_;              // num_edges * r, each block sorted
  std::vector<std::size_t> offsets_;      // n + 1
  std::vector<std::uint32_t> incidence_;  // r * num_edges
  std::vector<std::uint32_t> lex_order_;  // edge ids in lexicographic order
};

/// Vertex bipartition with no monochromatic edge.
struct TwoColoring {
  std::vector<std::uint8_t> assignment;  // part label per vertex, 0 or 1
  std::pair<std::size_t, std::size_t> part_sizes;

  static TwoColoring from_assignment(std::vector<std::uint8_t> labels);
};

/// True when `coloring` has the right length and leaves no edge monochromatic.
bool is_proper_coloring(const Hypergraph& h, const TwoColoring& coloring);

/// Fano plane on {0..6}: edges 012, 234, 450, 063, 164, 265, 135.
Hypergraph build_fano();

/// All C(n, r) r-subsets of {0..n-1}.
Hypergraph build_complete(std::size_t n, int r);

/// Complete 2-colorable 3-graph: parts {0..a-1} and {a..a+b-1}, every triple
/// meeting both parts is an edge.
std::pair<Hypergraph, TwoColoring> build_two_part_complete(std::size_t a, std::size_t b);

/// Balanced complete 2-colorable 3-graph B_n, larger part first.
std::pair<Hypergraph, TwoColoring> build_bn(std::size_t n);

/// Expansion of a graph: every base pair gains r-2 private fresh vertices,
/// numbered n_base, n_base+1, ... in edge order.
Hypergraph build_expansion(const std::vector<std::pair<Vertex, Vertex>>& base_edges,
                           std::size_t n_base, int r);

/// Connected components ordered by smallest vertex; each block is sorted.
/// Isolated vertices form singleton components.
std::vector<std::vector<Vertex>> components(const Hypergraph& h);

bool is_connected(const Hypergraph& h);

/// Throws Error{EmptyVertexSet} when n == 0.
std::size_t min_degree(const Hypergraph& h);

Hypergraph parse(std::string_view text);
std::string serialize(const Hypergraph& h);

Hypergraph read_file(const std::string& path);
void write_file(const std::string& path, const Hypergraph& h);

/// Binomial coefficient, 0 when k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace hyperq
