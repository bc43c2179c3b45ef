#include "ewi/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "ewi/errors.hpp"
#include "ewi/parallel.hpp"

namespace ewi {

IndexReport edge_indices_naive(const Graph& g, std::size_t edge_limit) {
    const std::size_t m = g.edge_count();
    if (m > edge_limit)
        throw Error("naive oracle refuses graphs with " + std::to_string(m) + " edges (limit " +
                    std::to_string(edge_limit) + ")");
    const auto start = std::chrono::steady_clock::now();
    const DistanceMatrix dm(g);

    struct Sums {
        u64 hat = 0, dist = 0, squares = 0;
    };
    std::vector<Sums> partial(m);
    parallel_for(m, [&](std::size_t e) {
        Sums s;
        for (EdgeId f = static_cast<EdgeId>(e) + 1; f < m; ++f) {
            const u64 hat = edge_distance_hat(g, static_cast<EdgeId>(e), f, dm);
            const u64 d = hat + 1;
            s.hat = checked_add(s.hat, hat);
            s.dist = checked_add(s.dist, d);
            s.squares = checked_add(s.squares, checked_mul(d, d));
        }
        partial[e] = s;
    });
    Sums total;
    for (const auto& s : partial) {
        total.hat = checked_add(total.hat, s.hat);
        total.dist = checked_add(total.dist, s.dist);
        total.squares = checked_add(total.squares, s.squares);
    }

    IndexReport r;
    r.m = m;
    r.method = Method::Naive;
    r.w_e_hat = total.hat;
    r.w_e = total.dist;
    // d + d^2 is always even.
    r.ww_e = checked_add(total.dist, total.squares) / 2;
    r.ww_star = checked_sub(checked_add(r.ww_e, binom2(m)), checked_mul(2, r.w_e));
    r.validate();
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

VertexIndices vertex_indices_naive(const Graph& g) {
    const std::size_t n = g.vertex_count();
    VertexIndices vi;
    u64 squares = 0;
    for (VertexId s = 0; s < n; ++s) {
        const DistanceRow row = bfs_distances(g, s);
        for (VertexId t = s + 1; t < n; ++t) {
            const u64 d = row.dist[t];
            vi.wiener = checked_add(vi.wiener, d);
            squares = checked_add(squares, checked_mul(d, d));
        }
    }
    vi.hyper_wiener = checked_add(vi.wiener, squares) / 2;
    return vi;
}

Graph line_graph(const Graph& g) {
    Graph lg(g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto inc = g.neighbors(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                lg.add_edge(std::min(inc[i].edge, inc[j].edge), std::max(inc[i].edge, inc[j].edge));
    }
    return lg;
}

} // namespace ewi
