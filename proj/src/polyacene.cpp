#include "ewi/polyacene.hpp"

#include <algorithm>
#include <string>

#include "ewi/errors.hpp"

namespace ewi {

Benzenoid generate_polyacene(std::size_t h) {
    if (h == 0) throw Error("polyacene needs h >= 1");
    std::vector<Hex> hexes;
    for (std::size_t i = 0; i < h; ++i) hexes.push_back({static_cast<int>(i), 0});
    return build_benzenoid(hexes);
}

namespace {

u64 sixth(u64 numerator, const char* what) {
    if (numerator % 6) throw ConsistencyError(std::string(what) + " numerator not divisible by 6");
    return numerator / 6;
}

} // namespace

PolyaceneFormulas closed_formulas(u64 h) {
    if (h == 0) throw Error("polyacene needs h >= 1");
    const u64 h2 = checked_mul(h, h), h3 = checked_mul(h2, h);
    PolyaceneFormulas f;
    f.h = h;
    f.m = checked_add(checked_mul(5, h), 1);
    f.w_e = sixth(checked_mul(h, checked_add(checked_add(checked_mul(50, h2), checked_mul(69, h)), 43)), "W_e");
    // 25h^3 + 14h + 8 > 29h^2 for every h >= 1.
    const u64 star_poly =
        checked_sub(checked_add(checked_add(checked_mul(25, h3), checked_mul(14, h)), 8), checked_mul(29, h2));
    f.ww_star = sixth(checked_mul(h, star_poly), "WW_e*");
    f.ww_e = sixth(checked_mul(h, checked_add(checked_add(checked_add(checked_mul(25, h3), checked_mul(71, h2)),
                                                          checked_mul(77, h)),
                                              79)),
                   "WW_e");
    return f;
}

std::string_view to_string(CutPairFamily f) {
    switch (f) {
    case CutPairFamily::BC: return "B,C_k";
    case CutPairFamily::BD: return "B,D_k";
    case CutPairFamily::CC: return "C_k,C_l (k<l)";
    case CutPairFamily::DD: return "D_k,D_l (k<l)";
    case CutPairFamily::CDAscending: return "C_k,D_l (k<l)";
    case CutPairFamily::CDDescending: return "C_k,D_l (k>l)";
    case CutPairFamily::CDSame: return "C_k,D_k";
    }
    return "?";
}

u64 Table1Row::contribution() const {
    u64 f = checked_mul(a, b);
    if (c && d) f = checked_add(f, checked_mul(*c, *d));
    return f;
}

Table1Row table1_components(u64 h, CutPairFamily family, u64 k, u64 l) {
    const auto in_range = [&](u64 i) { return i >= 1 && i <= h; };
    const bool single = family == CutPairFamily::BC || family == CutPairFamily::BD || family == CutPairFamily::CDSame;
    if (!in_range(k) || (!single && !in_range(l)))
        throw Error("cut index out of range 1.." + std::to_string(h));
    if ((family == CutPairFamily::CC || family == CutPairFamily::DD || family == CutPairFamily::CDAscending) && !(k < l))
        throw Error(std::string(to_string(family)) + " requires k < l");
    if (family == CutPairFamily::CDDescending && !(k > l))
        throw Error(std::string(to_string(family)) + " requires k > l");

    switch (family) {
    case CutPairFamily::BC: return {2 * k - 1, 2 * h - 2 * k + 1, 2 * h - 2 * k, 2 * k - 2};
    case CutPairFamily::BD: return {2 * k - 2, 2 * h - 2 * k, 2 * h - 2 * k + 1, 2 * k - 1};
    case CutPairFamily::CC:
    case CutPairFamily::DD:
    case CutPairFamily::CDAscending: return {5 * k - 3, 5 * h - 5 * l + 2, std::nullopt, std::nullopt};
    case CutPairFamily::CDDescending: return {5 * l - 3, 5 * h - 5 * k + 2, std::nullopt, std::nullopt};
    case CutPairFamily::CDSame: return {5 * k - 4, 5 * h - 5 * k + 1, 0, 0};
    }
    throw Error("unknown cut pair family");
}

u64 ww_star_from_table1(u64 h) {
    u64 sum = 0;
    const auto add = [&](CutPairFamily f, u64 k, u64 l) {
        sum = checked_add(sum, table1_components(h, f, k, l).contribution());
    };
    for (u64 k = 1; k <= h; ++k) {
        add(CutPairFamily::BC, k, 0);
        add(CutPairFamily::BD, k, 0);
        add(CutPairFamily::CDSame, k, 0);
        for (u64 l = 1; l <= h; ++l) {
            if (k < l) {
                add(CutPairFamily::CC, k, l);
                add(CutPairFamily::DD, k, l);
                add(CutPairFamily::CDAscending, k, l);
            } else if (k > l) {
                add(CutPairFamily::CDDescending, k, l);
            }
        }
    }
    return sum;
}

PolyaceneCuts label_polyacene_cuts(const Benzenoid& b, std::size_t h) {
    if (b.cuts.size() != 2 * h + 1) throw Error("benzenoid is not L_" + std::to_string(h));
    PolyaceneCuts pc;
    std::vector<std::pair<int, std::size_t>> c_cuts, d_cuts;   // (midpoint x, cut index)
    bool found_b = false;
    for (std::size_t i = 0; i < b.cuts.size(); ++i) {
        const auto& cut = b.cuts[i];
        if (cut.size() == h + 1 && b.edge_direction[cut.front()] == 1) {
            if (found_b) throw Error("more than one spine cut");
            pc.b = i;
            found_b = true;
            continue;
        }
        if (cut.size() != 2) throw Error("unexpected cut size " + std::to_string(cut.size()));
        // Doubled midpoints of the two edges.
        std::array<LatticePoint, 2> mid;
        for (int j = 0; j < 2; ++j) {
            const Edge& e = b.graph.edge(cut[j]);
            mid[j] = {b.vertex_coord[e.u].x + b.vertex_coord[e.v].x, b.vertex_coord[e.u].y + b.vertex_coord[e.v].y};
        }
        if (mid[0].y < mid[1].y) std::swap(mid[0], mid[1]);   // mid[0] is the upper edge
        const int centre = mid[0].x + mid[1].x;
        (mid[0].x > mid[1].x ? c_cuts : d_cuts).push_back({centre, i});
    }
    if (!found_b || c_cuts.size() != h || d_cuts.size() != h) throw Error("benzenoid is not L_" + std::to_string(h));
    std::sort(c_cuts.begin(), c_cuts.end());
    std::sort(d_cuts.begin(), d_cuts.end());
    for (const auto& [x, i] : c_cuts) pc.c.push_back(i);
    for (const auto& [x, i] : d_cuts) pc.d.push_back(i);
    return pc;
}

} // namespace ewi
