#pragma once

#include <optional>
#include <vector>

#include "hyperq/hypergraph.hpp"

namespace hyperq {

/// Injective map pattern vertex -> host vertex sending every pattern edge onto
/// a host edge (non-induced subgraph containment).
struct Embedding {
  std::vector<Vertex> map;
};

bool is_valid_embedding(const Hypergraph& host, const Hypergraph& pattern, const Embedding& emb);

/// Exhaustive backtracking. Pattern vertices are placed in order of
/// descending pattern degree; host candidates are tried in increasing order,
/// so the witness is deterministic. Throws UniformityMismatch.
std::optional<Embedding> contains_subgraph(const Hypergraph& host, const Hypergraph& pattern);

/// Requires a 3-graph.
bool is_fano_free(const Hypergraph& h);

/// Backtracking 2-coloring with unit propagation. Vertices without incident
/// edges are labeled 0.
std::optional<TwoColoring> two_coloring(const Hypergraph& h);

}  // namespace hyperq
