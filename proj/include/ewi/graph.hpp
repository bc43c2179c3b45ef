#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

namespace ewi {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    VertexId u;
    VertexId v;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool has(VertexId x) const { return x == u || x == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    VertexId neighbor;
    EdgeId edge;
};

/// Simple undirected graph with dense vertex ids 0..n-1 and edge ids equal to
/// insertion order. Edges are never removed, so ids stay stable.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);

    /// Validates every edge (range, self-loop, duplicate); throws GraphError.
    Graph(std::size_t vertex_count, std::span<const Edge> edges);

    EdgeId add_edge(VertexId u, VertexId v);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Incidence> neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    bool has_edge(VertexId u, VertexId v) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::unordered_set<std::uint64_t> keys_;
};

bool is_connected(const Graph& g);

/// True when g is connected with exactly n-1 edges.
bool is_tree(const Graph& g);

/// Connected components of g with the edges flagged in `removed` deleted.
/// Component ids are assigned in order of their smallest vertex.
struct Components {
    std::vector<std::uint32_t> of_vertex;
    std::size_t count = 0;
};
Components components_without(const Graph& g, const std::vector<bool>& removed);

// ---------------------------------------------------------------------------
// Distances

using Distance = std::uint32_t;

struct DistanceRow {
    VertexId source;
    std::vector<Distance> dist;
};

/// Hop distances from `source`. Throws GraphError("graph not connected") if
/// some vertex is unreachable.
DistanceRow bfs_distances(const Graph& g, VertexId source);

/// All BFS rows stored as a dense n*n table.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph& g);

    std::size_t size() const { return n_; }
    Distance operator()(VertexId u, VertexId v) const { return data_[std::size_t(u) * n_ + v]; }
    std::span<const Distance> row(VertexId u) const {
        return {data_.data() + std::size_t(u) * n_, n_};
    }

private:
    std::size_t n_ = 0;
    std::vector<Distance> data_;
};

/// min over the four endpoint pairings; 0 for e == f or edges sharing a vertex.
Distance edge_distance_hat(const Graph& g, EdgeId e, EdgeId f, const DistanceMatrix& dm);

// ---------------------------------------------------------------------------
// Bipartiteness

struct BipartiteResult {
    bool bipartite = false;
    std::vector<std::uint8_t> color;    // valid when bipartite
    std::vector<VertexId> odd_cycle;    // closed walk of odd length otherwise
};

BipartiteResult is_bipartite(const Graph& g);

} // namespace ewi
