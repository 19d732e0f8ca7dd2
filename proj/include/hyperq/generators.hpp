#pragma once

// Seeded random hypergraph families used by the verification scans and tests.

#include <cstddef>
#include <random>

#include "hyperq/hypergraph.hpp"

namespace hyperq {

/// Connected 3-graph on n >= 3 vertices: a random spanning chain of edges
/// (each new vertex joins two earlier ones) plus every other triple with
/// probability `density`.
Hypergraph random_connected_3graph(std::size_t n, double density, std::mt19937_64& rng);

/// 3-graph with a random bipartition (parts of size >= 1) keeping each
/// crossing triple with probability `density`. Always 2-colorable.
Hypergraph random_two_colorable(std::size_t n, double density, std::mt19937_64& rng);

/// Random relabeling of the vertices.
Hypergraph permuted(const Hypergraph& h, std::mt19937_64& rng);

}  // namespace hyperq
