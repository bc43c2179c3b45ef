#pragma once

#include "ewi/graph.hpp"
#include "ewi/index_report.hpp"

namespace ewi {

// Definition-level reference computations. Nothing here knows about Theta
// classes or cuts.

inline constexpr std::size_t kDefaultOracleEdgeLimit = 20000;

/// All unordered pairs of distinct edges, d_hat from BFS endpoint distances,
/// d = d_hat + 1. Throws Error if m exceeds `edge_limit`.
IndexReport edge_indices_naive(const Graph& g, std::size_t edge_limit = kDefaultOracleEdgeLimit);

struct VertexIndices {
    u64 wiener = 0;
    u64 hyper_wiener = 0;
};

/// W and WW summed over unordered vertex pairs.
VertexIndices vertex_indices_naive(const Graph& g);

/// Vertex i of the result is edge i of g; adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

} // namespace ewi
