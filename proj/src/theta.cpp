#include "ewi/theta.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "ewi/parallel.hpp"

namespace ewi {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::uint32_t> parent_;
};

} // namespace

bool djokovic_winkler(const Graph& g, const DistanceMatrix& dm, EdgeId e, EdgeId f) {
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    return dm(a.u, b.u) + dm(a.v, b.v) != dm(a.u, b.v) + dm(a.v, b.u);
}

ThetaClasses theta_classes(const Graph& g) {
    if (!is_bipartite(g).bipartite) throw NotPartialCube(RejectReason::OddCycle);
    return theta_classes(g, DistanceMatrix(g));
}

ThetaClasses theta_classes(const Graph& g, const DistanceMatrix& dm) {
    const std::size_t m = g.edge_count();
    DisjointSets sets(m);
    const auto edges = g.edges();
    for (EdgeId e = 0; e < m; ++e) {
        const auto rx = dm.row(edges[e].u);
        const auto ry = dm.row(edges[e].v);
        for (EdgeId f = e + 1; f < m; ++f) {
            const VertexId u = edges[f].u, v = edges[f].v;
            if (rx[u] + ry[v] != rx[v] + ry[u]) sets.unite(e, f);
        }
    }
    std::vector<std::vector<EdgeId>> parts;
    std::vector<std::uint32_t> index_of_root(m, ~std::uint32_t{0});
    for (EdgeId e = 0; e < m; ++e) {
        const auto root = sets.find(e);
        if (index_of_root[root] == ~std::uint32_t{0}) {
            index_of_root[root] = static_cast<std::uint32_t>(parts.size());
            parts.emplace_back();
        }
        parts[index_of_root[root]].push_back(e);
    }
    return classes_from_partition(m, std::move(parts));
}

ThetaClasses classes_from_partition(std::size_t edge_count, std::vector<std::vector<EdgeId>> parts) {
    ThetaClasses tc;
    tc.class_of.assign(edge_count, ~std::uint32_t{0});
    for (auto& p : parts) {
        if (p.empty()) throw ConsistencyError("empty edge class");
        std::sort(p.begin(), p.end());
    }
    std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    for (std::uint32_t k = 0; k < parts.size(); ++k) {
        for (EdgeId e : parts[k]) {
            if (e >= edge_count || tc.class_of[e] != ~std::uint32_t{0})
                throw ConsistencyError("edge classes do not partition the edge set");
            tc.class_of[e] = k;
        }
        tc.representative.push_back(parts[k].front());
    }
    for (auto c : tc.class_of)
        if (c == ~std::uint32_t{0}) throw ConsistencyError("edge classes do not cover the edge set");
    tc.classes = std::move(parts);
    return tc;
}

namespace {

using Mask = std::uint64_t;

// Bit-parallel traversal for the classes base .. base+width-1: afterwards bit j
// of reach[v] is set iff v is reachable from root in G - E_{base+j}. A vertex
// is requeued only when its mask grows, so on a partial cube every vertex is
// expanded once.
void flood(const Graph& g, const ThetaClasses& tc, std::size_t base, std::size_t width, VertexId root,
           std::vector<Mask>& reach, std::vector<VertexId>& queue, std::vector<std::uint8_t>& queued) {
    const Mask full = width == 64 ? ~Mask{0} : (Mask{1} << width) - 1;
    std::fill(reach.begin(), reach.end(), Mask{0});
    queue.clear();
    reach[root] = full;
    queue.push_back(root);
    queued[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        queued[x] = 0;
        const Mask mx = reach[x];
        for (const auto& inc : g.neighbors(x)) {
            const std::size_t c = tc.class_of[inc.edge];
            const Mask block = c >= base && c < base + width ? Mask{1} << (c - base) : 0;
            const Mask add = mx & ~block & ~reach[inc.neighbor];
            if (!add) continue;
            reach[inc.neighbor] |= add;
            if (!queued[inc.neighbor]) {
                queued[inc.neighbor] = 1;
                queue.push_back(inc.neighbor);
            }
        }
    }
}

// Writes row r of `rows` (r < count) as bit r of word `word` in out[j] for
// every j < width.
void scatter_transposed(std::array<Mask, 64>& rows, std::size_t width, std::size_t word, BitVector* out) {
    transpose64(rows);
    for (std::size_t j = 0; j < width; ++j) out[j].words()[word] = rows[j];
}

Rejection not_a_cut(const Graph& g, const ThetaClasses& tc, std::size_t k) {
    const Edge& rep = g.edge(tc.representative[k]);
    const std::string name = "class of edge (" + std::to_string(rep.u) + "," + std::to_string(rep.v) + ")";
    std::vector<bool> removed(g.edge_count(), false);
    for (EdgeId e : tc.classes[k]) removed[e] = true;
    const Components comp = components_without(g, removed);
    std::string detail = name + " splits the graph into " + std::to_string(comp.count) + " components";
    if (comp.count == 2) {
        for (EdgeId e : tc.classes[k]) {
            const Edge& ed = g.edge(e);
            if (comp.of_vertex[ed.u] == comp.of_vertex[ed.v]) {
                detail = name + ": edge (" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
                         ") does not cross the cut";
                break;
            }
        }
    }
    return Rejection{RejectReason::ClassNotACut, std::move(detail), {rep.u, rep.v}};
}

// Fills `cst`; returns the failure of the smallest offending class, if any.
//
// Classes are handled 64 at a time. One traversal from vertex 0 gives side A
// of every class in the batch; a second from a far vertex confirms that side B
// is connected for the classes separating the two roots, and the remaining
// classes get a plain traversal of side B.
std::optional<Rejection> build_sides(const Graph& g, const ThetaClasses& tc, CutSideTable& cst) {
    const std::size_t m = g.edge_count(), n = g.vertex_count(), d = tc.size();
    cst.edge_count = m;
    cst.vertex_count = n;
    cst.a.assign(d, BitVector(m));
    cst.b.assign(d, BitVector(m));
    cst.vertex_side.assign(d, BitVector(n));
    cst.a_count.assign(d, 0);
    cst.b_count.assign(d, 0);
    if (d == 0) return std::nullopt;

    const DistanceRow from0 = bfs_distances(g, 0);
    const auto far = static_cast<VertexId>(std::max_element(from0.dist.begin(), from0.dist.end()) - from0.dist.begin());

    std::vector<bool> failed(d, false);
    const std::size_t batches = (d + 63) / 64;
    parallel_chunks(batches, [&](std::size_t lo, std::size_t hi) {
        std::vector<Mask> near(n), away(n);
        std::vector<VertexId> queue, stack;
        std::vector<std::uint8_t> queued(n, 0);
        std::vector<std::uint32_t> seen(n, 0);
        std::uint32_t stamp = 0;
        std::array<Mask, 64> rows;

        for (std::size_t batch = lo; batch < hi; ++batch) {
            const std::size_t base = batch * 64, width = std::min<std::size_t>(64, d - base);
            const Mask full = width == 64 ? ~Mask{0} : (Mask{1} << width) - 1;
            flood(g, tc, base, width, 0, near, queue, queued);
            flood(g, tc, base, width, far, away, queue, queued);

            // Side B of class base+j, when far lies in it, must be exactly
            // what far reaches.
            Mask unreached = 0;
            for (VertexId v = 0; v < n; ++v) unreached |= ~(near[v] ^ away[v]);
            for (std::size_t j = 0; j < width; ++j) {
                const std::size_t k = base + j;
                const Mask bit = Mask{1} << j;
                bool ok = true;
                for (EdgeId e : tc.classes[k]) {
                    const Edge& ed = g.edge(e);
                    if (!((near[ed.u] ^ near[ed.v]) & bit)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && (near[far] & bit)) {
                    // Both roots on side A: walk side B directly.
                    const Edge& rep = g.edge(tc.representative[k]);
                    const VertexId s = (near[rep.u] & bit) ? rep.v : rep.u;
                    std::size_t reached = 0, side_b = 0;
                    for (VertexId v = 0; v < n; ++v) side_b += !(near[v] & bit);
                    ++stamp;
                    seen[s] = stamp;
                    stack.push_back(s);
                    while (!stack.empty()) {
                        const VertexId x = stack.back();
                        stack.pop_back();
                        ++reached;
                        for (const auto& inc : g.neighbors(x)) {
                            if (seen[inc.neighbor] == stamp || tc.class_of[inc.edge] == k) continue;
                            seen[inc.neighbor] = stamp;
                            stack.push_back(inc.neighbor);
                        }
                    }
                    ok = reached == side_b;
                } else if (ok) {
                    ok = !(unreached & bit);
                }
                failed[k] = !ok;
            }

            for (std::size_t w = 0; w * 64 < n; ++w) {
                for (std::size_t r = 0; r < 64; ++r) {
                    const std::size_t v = w * 64 + r;
                    rows[r] = v < n ? ~near[v] & full : 0;
                }
                scatter_transposed(rows, width, w, &cst.vertex_side[base]);
            }
            std::array<Mask, 64> rows_b;
            for (std::size_t w = 0; w * 64 < m; ++w) {
                for (std::size_t r = 0; r < 64; ++r) {
                    const std::size_t e = w * 64 + r;
                    rows[r] = rows_b[r] = 0;
                    if (e >= m) continue;
                    const std::size_t c = tc.class_of[e];
                    const Mask keep = full & ~(c >= base && c < base + width ? Mask{1} << (c - base) : 0);
                    rows[r] = near[g.edge(e).u] & keep;
                    rows_b[r] = ~near[g.edge(e).u] & keep;
                }
                scatter_transposed(rows, width, w, &cst.a[base]);
                scatter_transposed(rows_b, width, w, &cst.b[base]);
            }
        }
    });
    for (std::size_t k = 0; k < d; ++k)
        if (failed[k]) return not_a_cut(g, tc, k);
    for (std::size_t k = 0; k < d; ++k) {
        cst.a_count[k] = cst.a[k].count();
        cst.b_count[k] = cst.b[k].count();
    }
    return std::nullopt;
}

} // namespace

CutSideTable cut_side_table(const Graph& g, const ThetaClasses& tc) {
    CutSideTable cst;
    if (auto failure = build_sides(g, tc, cst))
        throw NotPartialCube(RejectReason::ClassNotACut, failure->detail);
    return cst;
}

std::size_t separating_classes(const CutSideTable& cst, EdgeId e, EdgeId f) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < cst.class_count(); ++k)
        if ((cst.a[k].test(e) && cst.b[k].test(f)) || (cst.b[k].test(e) && cst.a[k].test(f))) ++count;
    return count;
}

HammingLabeling hamming_labeling(const CutSideTable& cst) {
    const std::size_t d = cst.class_count();
    HammingLabeling hl;
    hl.labels.assign(cst.vertex_count, BitVector(d));
    for (std::size_t k = 0; k < d; ++k)
        for (VertexId v = 0; v < cst.vertex_count; ++v)
            if (cst.vertex_side[k].test(v)) hl.labels[v].set(k);
    return hl;
}

Certification certify_partial_cube(const Graph& g) {
    if (auto bip = is_bipartite(g); !bip.bipartite)
        return Rejection{RejectReason::OddCycle,
                         "odd cycle of length " + std::to_string(bip.odd_cycle.size()),
                         std::move(bip.odd_cycle)};

    const DistanceMatrix dm(g);
    PartialCube pc;
    pc.classes = theta_classes(g, dm);
    if (auto failure = build_sides(g, pc.classes, pc.sides)) return std::move(*failure);
    pc.labels = hamming_labeling(pc.sides);

    const std::size_t n = g.vertex_count();
    for (VertexId u = 0; u < n; ++u) {
        const auto row = dm.row(u);
        for (VertexId v = u + 1; v < n; ++v) {
            if (hamming_distance(pc.labels.labels[u], pc.labels.labels[v]) != row[v])
                return Rejection{RejectReason::LabelingMismatch,
                                 "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                     " are at distance " + std::to_string(row[v]) + " but labels differ in " +
                                     std::to_string(hamming_distance(pc.labels.labels[u], pc.labels.labels[v])) +
                                     " coordinates",
                                 {u, v}};
        }
    }
    return pc;
}

PartialCube require_partial_cube(const Graph& g) {
    auto cert = certify_partial_cube(g);
    if (auto* r = std::get_if<Rejection>(&cert)) throw NotPartialCube(r->reason, r->detail);
    return std::move(std::get<PartialCube>(cert));
}

} // namespace ewi
