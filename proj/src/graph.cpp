#include "ewi/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ewi/errors.hpp"
#include "ewi/parallel.hpp"

namespace ewi {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t(u) << 32) | v;
}

constexpr Distance kUnreached = ~Distance{0};

void bfs_into(const Graph& g, VertexId source, std::span<Distance> dist, std::vector<VertexId>& queue) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        for (const auto& inc : g.neighbors(x)) {
            if (dist[inc.neighbor] == kUnreached) {
                dist[inc.neighbor] = dist[x] + 1;
                queue.push_back(inc.neighbor);
            }
        }
    }
    if (queue.size() != g.vertex_count()) throw GraphError("graph not connected");
}

} // namespace

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count) {
    edges_.reserve(edges.size());
    for (const auto& e : edges) add_edge(e.u, e.v);
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
    if (u >= vertex_count() || v >= vertex_count())
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") references a vertex outside 0.." + std::to_string(vertex_count()));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (!keys_.insert(edge_key(u, v)).second)
        throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    adjacency_[u].push_back({v, id});
    adjacency_[v].push_back({u, id});
    return id;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    return keys_.count(edge_key(u, v)) != 0;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return components_without(g, std::vector<bool>(g.edge_count(), false)).count == 1;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

Components components_without(const Graph& g, const std::vector<bool>& removed) {
    constexpr auto kNone = ~std::uint32_t{0};
    Components c;
    c.of_vertex.assign(g.vertex_count(), kNone);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (c.of_vertex[s] != kNone) continue;
        const auto id = static_cast<std::uint32_t>(c.count++);
        c.of_vertex[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (const auto& inc : g.neighbors(x)) {
                if (removed[inc.edge] || c.of_vertex[inc.neighbor] != kNone) continue;
                c.of_vertex[inc.neighbor] = id;
                stack.push_back(inc.neighbor);
            }
        }
    }
    return c;
}

DistanceRow bfs_distances(const Graph& g, VertexId source) {
    if (source >= g.vertex_count()) throw GraphError("BFS source out of range");
    DistanceRow row{source, std::vector<Distance>(g.vertex_count())};
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    bfs_into(g, source, row.dist, queue);
    return row;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()), data_(n_ * n_) {
    parallel_chunks(n_, [&](std::size_t lo, std::size_t hi) {
        std::vector<VertexId> queue;
        queue.reserve(n_);
        for (std::size_t s = lo; s < hi; ++s)
            bfs_into(g, static_cast<VertexId>(s), {data_.data() + s * n_, n_}, queue);
    });
}

Distance edge_distance_hat(const Graph& g, EdgeId e, EdgeId f, const DistanceMatrix& dm) {
    if (e >= g.edge_count() || f >= g.edge_count()) throw GraphError("edge id out of range");
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    return std::min({dm(a.u, b.u), dm(a.u, b.v), dm(a.v, b.u), dm(a.v, b.v)});
}

BipartiteResult is_bipartite(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr auto kNone = ~VertexId{0};
    BipartiteResult res;
    res.color.assign(n, 0);
    std::vector<Distance> depth(n, kUnreached);
    std::vector<VertexId> parent(n, kNone);
    std::queue<VertexId> q;
    for (VertexId s = 0; s < n; ++s) {
        if (depth[s] != kUnreached) continue;
        depth[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const VertexId x = q.front();
            q.pop();
            for (const auto& inc : g.neighbors(x)) {
                const VertexId y = inc.neighbor;
                if (depth[y] == kUnreached) {
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    res.color[y] = res.color[x] ^ 1;
                    q.push(y);
                } else if (res.color[y] == res.color[x]) {
                    // x and y sit on the same BFS level; climb to their LCA.
                    std::vector<VertexId> left{x}, right{y};
                    VertexId a = x, b = y;
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    res.odd_cycle = std::move(left);
                    res.odd_cycle.insert(res.odd_cycle.end(), right.rbegin(), right.rend());
                    res.color.clear();
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

} // namespace ewi
