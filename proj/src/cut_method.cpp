#include "ewi/cut_method.hpp"

#include <chrono>

#include "ewi/parallel.hpp"

namespace ewi {

EdgeWiener edge_wiener_cut(const CutSideTable& cst) {
    EdgeWiener r;
    for (std::size_t k = 0; k < cst.class_count(); ++k)
        r.w_e_hat = checked_add(r.w_e_hat, checked_mul(cst.a_count[k], cst.b_count[k]));
    r.w_e = checked_add(r.w_e_hat, binom2(cst.edge_count));
    return r;
}

namespace {

u64 class_edges_in(const std::vector<EdgeId>& cls, const BitVector& side) {
    u64 c = 0;
    for (EdgeId e : cls) c += side.test(e);
    return c;
}

// Only m11 needs a word-level intersection. With x = |A_k & E_l| and
// y = |E_k & A_l|:
//   m10 = |A_k| - m11 - x,  m01 = |A_l| - m11 - y,
//   m00 = |B_k| - m01 - (|E_l| - x).
PairCounts counts_from(const CutSideTable& cst, const ThetaClasses& tc, std::size_t k, std::size_t l, u64 m11) {
    const u64 x = class_edges_in(tc.classes[l], cst.a[k]);
    const u64 y = class_edges_in(tc.classes[k], cst.a[l]);
    PairCounts p;
    p.m11 = m11;
    p.m10 = cst.a_count[k] - m11 - x;
    p.m01 = cst.a_count[l] - m11 - y;
    p.m00 = cst.b_count[k] - p.m01 - (tc.classes[l].size() - x);
    return p;
}

} // namespace

PairCounts pair_counts(const CutSideTable& cst, const ThetaClasses& tc, std::size_t k, std::size_t l) {
    return counts_from(cst, tc, k, l, intersection_count(cst.a[k], cst.a[l]));
}

u64 ww_star(const CutSideTable& cst, const ThetaClasses& tc) {
    const std::size_t d = cst.class_count();
    std::vector<u64> partial(d, 0);
    parallel_for(d, [&](std::size_t k) {
        u64 sum = 0;
        for (std::size_t l = k + 1; l < d; ++l)
            sum = checked_add(sum, counts_from(cst, tc, k, l, intersection_count(cst.a[k], cst.a[l])).contribution());
        partial[k] = sum;
    });
    u64 total = 0;
    for (u64 p : partial) total = checked_add(total, p);
    return total;
}

IndexReport edge_hyper_wiener_cut(const PartialCube& pc) {
    const EdgeWiener ew = edge_wiener_cut(pc.sides);
    IndexReport r = make_report(pc.sides.edge_count, ew.w_e_hat, ww_star(pc.sides, pc.classes), Method::GenericCut);
    r.validate();
    return r;
}

IndexReport edge_hyper_wiener_cut(const Graph& g) {
    const auto start = std::chrono::steady_clock::now();
    IndexReport r = edge_hyper_wiener_cut(require_partial_cube(g));
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

IndexReport tree_edge_hyper_wiener(const Graph& t) {
    if (!is_tree(t)) throw GraphError("input is not a tree");
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = t.vertex_count(), m = t.edge_count();

    // Root at vertex 0. For each edge: its lower endpoint, and the number of
    // edges hanging below that endpoint. Euler-tour times give O(1)
    // ancestor tests.
    std::vector<VertexId> lower(m);
    std::vector<u64> below(m, 0);
    std::vector<std::uint32_t> tin(n), tout(n), size(n, 1);
    std::vector<EdgeId> parent_edge(n, ~EdgeId{0});
    std::vector<std::pair<VertexId, std::size_t>> stack{{0, 0}};
    std::uint32_t clock = 0;
    tin[0] = clock++;
    while (!stack.empty()) {
        auto& [x, next] = stack.back();
        const auto nbrs = t.neighbors(x);
        if (next < nbrs.size()) {
            const Incidence inc = nbrs[next++];
            if (inc.edge == parent_edge[x]) continue;
            parent_edge[inc.neighbor] = inc.edge;
            lower[inc.edge] = inc.neighbor;
            tin[inc.neighbor] = clock++;
            stack.push_back({inc.neighbor, 0});
        } else {
            const VertexId done = x;
            tout[done] = clock++;
            stack.pop_back();
            if (!stack.empty()) {
                size[stack.back().first] += size[done];
                below[parent_edge[done]] = size[done] - 1;
            }
        }
    }
    const auto contains = [&](VertexId anc, VertexId v) { return tin[anc] <= tin[v] && tout[v] <= tout[anc]; };

    u64 w_e_hat = 0;
    for (EdgeId e = 0; e < m; ++e) w_e_hat = checked_add(w_e_hat, checked_mul(below[e], m - 1 - below[e]));

    std::vector<u64> partial(m, 0);
    parallel_for(m, [&](std::size_t k) {
        u64 sum = 0;
        for (std::size_t l = k + 1; l < m; ++l) {
            u64 m1, m2;
            if (contains(lower[k], lower[l])) {
                m1 = m - 1 - below[k];
                m2 = below[l];
            } else if (contains(lower[l], lower[k])) {
                m1 = m - 1 - below[l];
                m2 = below[k];
            } else {
                m1 = below[k];
                m2 = below[l];
            }
            sum = checked_add(sum, checked_mul(m1, m2));
        }
        partial[k] = sum;
    });
    u64 ww = 0;
    for (u64 p : partial) ww = checked_add(ww, p);

    IndexReport r = make_report(m, w_e_hat, ww, Method::Tree);
    r.validate();
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

} // namespace ewi
