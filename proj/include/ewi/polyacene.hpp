#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ewi/benzenoid.hpp"
#include "ewi/checked.hpp"

namespace ewi {

/// Linear polyacene L_h: hexagons (0,0) .. (h-1,0).
Benzenoid generate_polyacene(std::size_t h);

/// Closed-form indices of L_h, evaluated exactly.
struct PolyaceneFormulas {
    u64 h = 0;
    u64 m = 0;        // 5h + 1
    u64 w_e = 0;      // h(50h^2 + 69h + 43) / 6
    u64 ww_star = 0;  // h(25h^3 - 29h^2 + 14h + 8) / 6
    u64 ww_e = 0;     // h(25h^3 + 71h^2 + 77h + 79) / 6
};

PolyaceneFormulas closed_formulas(u64 h);

// Elementary cuts of L_h: B crosses all h+1 vertical edges; C_k and D_k are
// the two oblique cuts through hexagon k (1-based, left to right). C_k's upper
// edge lies to the right of its lower edge, D_k's to the left.
enum class CutPairFamily {
    BC,          // B, C_k
    BD,          // B, D_k
    CC,          // C_k, C_l with k < l
    DD,          // D_k, D_l with k < l
    CDAscending, // C_k, D_l with k < l
    CDDescending,// C_k, D_l with k > l
    CDSame,      // C_k, D_k
};

std::string_view to_string(CutPairFamily f);

/// Edge counts of the parts of L_h - X - Y. c and d are absent for
/// non-crossing pairs, whose two extremal parts are a and b.
struct Table1Row {
    u64 a = 0;
    u64 b = 0;
    std::optional<u64> c;
    std::optional<u64> d;

    u64 contribution() const;
};

/// Symbolic row evaluation. `l` is ignored for BC, BD and CDSame. Throws
/// Error when an index is outside 1..h or violates the family's ordering.
Table1Row table1_components(u64 h, CutPairFamily family, u64 k, u64 l = 0);

/// Sum of the contributions of every cut pair of L_h taken from the symbolic
/// rows; an independent route to the pair term of L_h.
u64 ww_star_from_table1(u64 h);

/// Indices into b.cuts of B, C_1..C_h and D_1..D_h for a generated L_h.
struct PolyaceneCuts {
    std::size_t b = 0;
    std::vector<std::size_t> c;
    std::vector<std::size_t> d;
};

PolyaceneCuts label_polyacene_cuts(const Benzenoid& b, std::size_t h);

} // namespace ewi
