#include "ewi/benzenoid.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ewi/bitvector.hpp"
#include "ewi/errors.hpp"
#include "ewi/parallel.hpp"
#include "ewi/theta.hpp"

namespace ewi {

namespace {

constexpr std::array<LatticePoint, 6> kCorner{{{0, 2}, {1, 1}, {1, -1}, {0, -2}, {-1, -1}, {-1, 1}}};
// Hexagon sharing side i (corner i to corner i+1).
constexpr std::array<Hex, 6> kAcross{{{0, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}}};

Hex step(Hex h, int side) { return {h.q + kAcross[side].q, h.r + kAcross[side].r}; }

LatticePoint corner(Hex h, int i) {
    return {2 * h.q + h.r + kCorner[i].x, 3 * h.r + kCorner[i].y};
}

std::uint8_t direction_of(LatticePoint a, LatticePoint b) {
    const int dx = b.x - a.x, dy = b.y - a.y;
    if (dx == 0 && (dy == 2 || dy == -2)) return 1;
    if ((dx == 1 && dy == -1) || (dx == -1 && dy == 1)) return 2;
    if ((dx == 1 && dy == 1) || (dx == -1 && dy == -1)) return 3;
    throw ConsistencyError("lattice points are not adjacent");
}

std::vector<BenzenoidError::Hex> as_offending(const std::vector<Hex>& hs) {
    std::vector<BenzenoidError::Hex> out;
    for (const auto& h : hs) out.push_back({h.q, h.r});
    return out;
}

std::string describe(const std::vector<Hex>& hs) {
    std::string s;
    for (std::size_t i = 0; i < hs.size() && i < 8; ++i)
        s += (i ? " " : "") + std::string("(") + std::to_string(hs[i].q) + "," + std::to_string(hs[i].r) + ")";
    if (hs.size() > 8) s += " ...";
    return s;
}

// Missing cells enclosed by the system: flood from outside the bounding box,
// crossing only lattice sides that are not edges of the graph.
std::vector<Hex> enclosed_cells(const std::set<Hex>& cells, const std::map<LatticePoint, VertexId>& vid,
                                const Graph& g) {
    int qmin = cells.begin()->q, qmax = qmin, rmin = cells.begin()->r, rmax = rmin;
    for (const auto& h : cells) {
        qmin = std::min(qmin, h.q);
        qmax = std::max(qmax, h.q);
        rmin = std::min(rmin, h.r);
        rmax = std::max(rmax, h.r);
    }
    --qmin, ++qmax, --rmin, ++rmax;
    const auto inside_box = [&](Hex h) { return h.q >= qmin && h.q <= qmax && h.r >= rmin && h.r <= rmax; };
    const auto side_is_edge = [&](Hex h, int i) {
        const auto a = vid.find(corner(h, i)), b = vid.find(corner(h, (i + 1) % 6));
        return a != vid.end() && b != vid.end() && g.has_edge(a->second, b->second);
    };

    std::set<Hex> outside;
    std::vector<Hex> stack;
    for (int q = qmin; q <= qmax; ++q)
        for (int r = rmin; r <= rmax; ++r)
            if (q == qmin || q == qmax || r == rmin || r == rmax) {
                outside.insert({q, r});
                stack.push_back({q, r});
            }
    while (!stack.empty()) {
        const Hex h = stack.back();
        stack.pop_back();
        for (int i = 0; i < 6; ++i) {
            const Hex n = step(h, i);
            if (!inside_box(n) || cells.count(n) || outside.count(n) || side_is_edge(h, i)) continue;
            outside.insert(n);
            stack.push_back(n);
        }
    }
    std::vector<Hex> holes;
    for (int q = qmin; q <= qmax; ++q)
        for (int r = rmin; r <= rmax; ++r)
            if (!cells.count({q, r}) && !outside.count({q, r})) holes.push_back({q, r});
    return holes;
}

} // namespace

Benzenoid build_benzenoid(std::span<const Hex> input) {
    if (input.empty()) throw BenzenoidError("benzenoid needs at least one hexagon", {});
    std::set<Hex> cells;
    for (const auto& h : input)
        if (!cells.insert(h).second)
            throw BenzenoidError("duplicate hexagon " + describe({h}), as_offending({h}));

    {
        std::set<Hex> seen{*cells.begin()};
        std::vector<Hex> stack{*cells.begin()};
        while (!stack.empty()) {
            const Hex h = stack.back();
            stack.pop_back();
            for (int i = 0; i < 6; ++i) {
                const Hex n = step(h, i);
                if (cells.count(n) && seen.insert(n).second) stack.push_back(n);
            }
        }
        if (seen.size() != cells.size()) {
            std::vector<Hex> unreachable;
            for (const auto& h : cells)
                if (!seen.count(h)) unreachable.push_back(h);
            throw BenzenoidError("hexagon set is not connected; unreachable from " + describe({*cells.begin()}) +
                                     ": " + describe(unreachable),
                                 as_offending(unreachable));
        }
    }

    Benzenoid b;
    b.hexes.assign(cells.begin(), cells.end());

    std::map<LatticePoint, VertexId> vid;
    for (const auto& h : b.hexes)
        for (int i = 0; i < 6; ++i) vid.emplace(corner(h, i), 0);
    for (auto& [pt, id] : vid) {
        id = static_cast<VertexId>(b.vertex_coord.size());
        b.vertex_coord.push_back(pt);
    }

    std::set<std::pair<VertexId, VertexId>> sides;
    for (const auto& h : b.hexes)
        for (int i = 0; i < 6; ++i) {
            VertexId u = vid.at(corner(h, i)), v = vid.at(corner(h, (i + 1) % 6));
            sides.insert({std::min(u, v), std::max(u, v)});
        }
    b.graph = Graph(b.vertex_coord.size());
    std::map<std::pair<VertexId, VertexId>, EdgeId> eid;
    for (const auto& [u, v] : sides) {
        eid[{u, v}] = b.graph.add_edge(u, v);
        b.edge_direction.push_back(direction_of(b.vertex_coord[u], b.vertex_coord[v]));
    }

    const auto edge_between = [&](VertexId u, VertexId v) { return eid.at({std::min(u, v), std::max(u, v)}); };
    b.edge_hexes.assign(sides.size(), {kNoHex, kNoHex});
    for (std::size_t hi = 0; hi < b.hexes.size(); ++hi) {
        std::array<EdgeId, 6> ring{};
        for (int i = 0; i < 6; ++i) {
            ring[i] = edge_between(vid.at(corner(b.hexes[hi], i)), vid.at(corner(b.hexes[hi], (i + 1) % 6)));
            auto& slot = b.edge_hexes[ring[i]];
            (slot[0] == kNoHex ? slot[0] : slot[1]) = static_cast<std::int32_t>(hi);
        }
        b.hex_edges.push_back(ring);
    }

    // Every hexagon is a bounded face; any further bounded face is a hole.
    const long long inner_faces =
        static_cast<long long>(b.graph.edge_count()) - static_cast<long long>(b.graph.vertex_count()) + 1;
    if (inner_faces != static_cast<long long>(b.hexes.size())) {
        const auto holes = enclosed_cells(cells, vid, b.graph);
        if (holes.empty()) throw ConsistencyError("Euler count reports a hole but none was located");
        throw BenzenoidError("hexagon set encloses a hole at " + describe(holes), as_offending(holes));
    }

    b.cuts = elementary_cuts(b);
    return b;
}

std::vector<std::vector<EdgeId>> elementary_cuts(const Benzenoid& b) {
    const std::size_t m = b.graph.edge_count();
    std::vector<bool> visited(m, false);
    std::vector<std::vector<EdgeId>> cuts;
    for (EdgeId start = 0; start < m; ++start) {
        if (visited[start]) continue;
        std::vector<EdgeId> cut{start};
        visited[start] = true;
        for (std::int32_t first_hex : b.edge_hexes[start]) {
            if (first_hex == kNoHex) continue;
            EdgeId cur = start;
            std::int32_t hex = first_hex;
            while (true) {
                const auto& ring = b.hex_edges[hex];
                const auto pos = std::find(ring.begin(), ring.end(), cur) - ring.begin();
                const EdgeId opposite = ring[(pos + 3) % 6];
                if (visited[opposite])
                    throw ConsistencyError("elementary cut walk revisited edge " + std::to_string(opposite));
                if (b.edge_direction[opposite] != b.edge_direction[start])
                    throw ConsistencyError("elementary cut changed direction");
                visited[opposite] = true;
                cut.push_back(opposite);
                const auto& owners = b.edge_hexes[opposite];
                const std::int32_t next = owners[0] == hex ? owners[1] : owners[0];
                if (next == kNoHex) break;
                cur = opposite;
                hex = next;
            }
        }
        std::sort(cut.begin(), cut.end());
        cuts.push_back(std::move(cut));
    }
    return cuts;
}

bool cuts_intersect(const Benzenoid& b, std::size_t k, std::size_t l) {
    std::set<std::int32_t> hk;
    for (EdgeId e : b.cuts[k])
        for (auto h : b.edge_hexes[e])
            if (h != kNoHex) hk.insert(h);
    for (EdgeId e : b.cuts[l])
        for (auto h : b.edge_hexes[e])
            if (h != kNoHex && hk.count(h)) return true;
    return false;
}

std::array<WeightedQuotientTree, 3> quotient_trees(const Benzenoid& b) {
    const Graph& g = b.graph;
    std::array<WeightedQuotientTree, 3> trees;
    for (int dir = 1; dir <= 3; ++dir) {
        auto& t = trees[dir - 1];
        t.direction = dir;
        std::vector<bool> removed(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) removed[e] = b.edge_direction[e] == dir;
        const Components comp = components_without(g, removed);
        t.component_of_vertex = comp.of_vertex;
        t.node_weight.assign(comp.count, 0);

        std::vector<u64> vertices(comp.count, 0);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            ++vertices[comp.of_vertex[v]];
            std::size_t kept_degree = 0;
            for (const auto& inc : g.neighbors(v)) kept_degree += !removed[inc.edge];
            if (kept_degree > 2) throw ConsistencyError("component of G - E_" + std::to_string(dir) + " branches");
        }
        std::map<std::pair<std::uint32_t, std::uint32_t>, u64> joins;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const auto cu = comp.of_vertex[g.edge(e).u], cv = comp.of_vertex[g.edge(e).v];
            if (!removed[e]) {
                ++t.node_weight[cu];
            } else {
                if (cu == cv) throw ConsistencyError("direction edge inside a single component");
                ++joins[{std::min(cu, cv), std::max(cu, cv)}];
            }
        }
        for (std::size_t c = 0; c < comp.count; ++c)
            if (t.node_weight[c] + 1 != vertices[c])
                throw ConsistencyError("component of G - E_" + std::to_string(dir) + " is not a path");
        for (const auto& [ends, w] : joins) t.links.push_back({ends.first, ends.second, w});

        Graph quotient(comp.count);
        for (const auto& link : t.links) quotient.add_edge(link.a, link.b);
        if (!is_tree(quotient))
            throw ConsistencyError("quotient graph for direction " + std::to_string(dir) + " is not a tree");
    }
    return trees;
}

TreeWiener weighted_tree_wiener(const WeightedQuotientTree& t) {
    const std::size_t n = t.node_weight.size();
    TreeWiener r;
    if (n <= 1) return r;

    std::vector<std::vector<std::pair<std::uint32_t, u64>>> adj(n);
    u64 total_n = 0, total_m = 0;
    for (u64 w : t.node_weight) total_n = checked_add(total_n, w);
    for (const auto& l : t.links) {
        adj[l.a].push_back({l.b, l.weight});
        adj[l.b].push_back({l.a, l.weight});
        total_m = checked_add(total_m, l.weight);
    }

    std::vector<std::uint32_t> order, parent(n, ~std::uint32_t{0});
    std::vector<u64> up_weight(n, 0);
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (const auto& [y, w] : adj[x]) {
            if (seen[y]) continue;
            seen[y] = true;
            parent[y] = x;
            up_weight[y] = w;
            stack.push_back(y);
        }
    }

    // Subtree sums in reverse discovery order.
    std::vector<u64> sub_n(t.node_weight.begin(), t.node_weight.end()), sub_m(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto c = *it;
        if (c == 0) continue;
        const u64 n1 = sub_n[c], m1 = sub_m[c];
        const u64 n2 = total_n - n1, m2 = total_m - m1 - up_weight[c];
        r.w_v = checked_add(r.w_v, checked_mul(n1, n2));
        r.w_e_hat = checked_add(r.w_e_hat, checked_mul(m1, m2));
        r.w_ve = checked_add(r.w_ve, checked_add(checked_mul(n1, m2), checked_mul(n2, m1)));
        sub_n[parent[c]] = checked_add(sub_n[parent[c]], n1);
        sub_m[parent[c]] = checked_add(sub_m[parent[c]], checked_add(m1, up_weight[c]));
    }
    return r;
}

EdgeWiener edge_wiener_benzenoid(const Benzenoid& b) {
    EdgeWiener r;
    for (const auto& t : quotient_trees(b)) {
        const TreeWiener tw = weighted_tree_wiener(t);
        r.w_e_hat = checked_add(r.w_e_hat, checked_add(tw.w_e_hat, checked_add(tw.w_v, tw.w_ve)));
    }
    r.w_e = checked_add(r.w_e_hat, binom2(b.graph.edge_count()));
    return r;
}

IndexReport algorithm1_edge_hyper_wiener(const Benzenoid& b) {
    const auto start = std::chrono::steady_clock::now();
    const Graph& g = b.graph;
    const EdgeWiener ew = edge_wiener_benzenoid(b);

    const ThetaClasses tc = classes_from_partition(g.edge_count(), b.cuts);
    const CutSideTable cst = cut_side_table(g, tc);
    const std::size_t d = tc.size();

    std::vector<BitVector> through(d, BitVector(b.hex_count()));
    for (std::size_t k = 0; k < d; ++k)
        for (EdgeId e : tc.classes[k])
            for (auto h : b.edge_hexes[e])
                if (h != kNoHex) through[k].set(static_cast<std::size_t>(h));

    std::vector<u64> partial(d, 0);
    parallel_for(d, [&](std::size_t k) {
        u64 sum = 0;
        for (std::size_t l = k + 1; l < d; ++l) {
            const PairCounts p = pair_counts(cst, tc, k, l);
            const bool all_quadrants = p.m11 && p.m10 && p.m01 && p.m00;
            if (all_quadrants && intersection_count(through[k], through[l]) == 0)
                throw ConsistencyError("cuts " + std::to_string(k) + " and " + std::to_string(l) +
                                       " split the edges four ways without crossing");
            sum = checked_add(sum, p.contribution());
        }
        partial[k] = sum;
    });
    u64 star = 0;
    for (u64 p : partial) star = checked_add(star, p);

    IndexReport r = make_report(g.edge_count(), ew.w_e_hat, star, Method::Benzenoid);
    r.validate();
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

std::vector<CutPairComponent> cut_pair_components(const Benzenoid& b, std::size_t k, std::size_t l) {
    const Graph& g = b.graph;
    std::vector<bool> removed(g.edge_count(), false);
    for (EdgeId e : b.cuts[k]) removed[e] = true;
    for (EdgeId e : b.cuts[l]) removed[e] = true;
    const Components comp = components_without(g, removed);
    std::vector<CutPairComponent> out(comp.count);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!removed[e]) ++out[comp.of_vertex[g.edge(e).u]].edges;
    for (EdgeId e : b.cuts[k]) {
        out[comp.of_vertex[g.edge(e).u]].touches_k = true;
        out[comp.of_vertex[g.edge(e).v]].touches_k = true;
    }
    for (EdgeId e : b.cuts[l]) {
        out[comp.of_vertex[g.edge(e).u]].touches_l = true;
        out[comp.of_vertex[g.edge(e).v]].touches_l = true;
    }
    return out;
}

Benzenoid random_catacondensed(std::size_t hex_count, std::uint64_t seed) {
    if (hex_count < 1) throw BenzenoidError("benzenoid needs at least one hexagon", {});
    std::mt19937_64 rng(seed);
    std::set<Hex> cells{{0, 0}};
    std::vector<Hex> order{{0, 0}};
    while (cells.size() < hex_count) {
        std::set<Hex> candidates;
        for (const auto& h : cells)
            for (int i = 0; i < 6; ++i) {
                const Hex n = step(h, i);
                if (cells.count(n)) continue;
                int touching = 0;
                for (int j = 0; j < 6; ++j) touching += cells.count(step(n, j)) ? 1 : 0;
                if (touching == 1) candidates.insert(n);
            }
        if (candidates.empty()) throw ConsistencyError("no catacondensed extension available");
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const Hex chosen = *std::next(candidates.begin(), static_cast<std::ptrdiff_t>(pick(rng)));
        cells.insert(chosen);
        order.push_back(chosen);
    }
    return build_benzenoid(order);
}

std::vector<Hex> read_hexes(std::istream& in) {
    std::vector<Hex> hexes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ss(line);
        Hex h;
        std::string rest;
        if (!(ss >> h.q >> h.r) || (ss >> rest)) throw ParseError(lineno, "expected \"q r\"");
        hexes.push_back(h);
    }
    if (hexes.empty()) throw ParseError(0, "no hexagons in input");
    return hexes;
}

std::vector<Hex> read_hexes_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return read_hexes(in);
}

void write_hexes(std::ostream& out, std::span<const Hex> hexes) {
    for (const auto& h : hexes) out << h.q << ' ' << h.r << '\n';
}

} // namespace ewi
