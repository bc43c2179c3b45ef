#pragma once

#include "ewi/graph.hpp"
#include "ewi/index_report.hpp"
#include "ewi/theta.hpp"

namespace ewi {

struct EdgeWiener {
    u64 w_e_hat = 0;
    u64 w_e = 0;
};

/// w_e_hat = sum_k |A_k| |B_k|, w_e = w_e_hat + C(m,2).
EdgeWiener edge_wiener_cut(const CutSideTable& cst);

/// Edge counts of the four quadrants of G - E_k - E_l:
/// m11 = |A_k & A_l|, m10 = |A_k & B_l|, m01 = |B_k & A_l|, m00 = |B_k & B_l|.
struct PairCounts {
    u64 m11 = 0, m10 = 0, m01 = 0, m00 = 0;

    u64 contribution() const { return checked_add(checked_mul(m11, m00), checked_mul(m10, m01)); }
};

/// One popcount intersection for m11; the other three follow from the side
/// sizes and the two class edge lists.
PairCounts pair_counts(const CutSideTable& cst, const ThetaClasses& tc, std::size_t k, std::size_t l);

/// sum over k < l of m11 m00 + m10 m01, parallel over k.
u64 ww_star(const CutSideTable& cst, const ThetaClasses& tc);

/// Certifies g (throws NotPartialCube on rejection) and evaluates the cut
/// formulas; method = generic-cut.
IndexReport edge_hyper_wiener_cut(const Graph& g);
IndexReport edge_hyper_wiener_cut(const PartialCube& pc);

/// Tree specialisation: every class is a single edge and the pair term is
/// the product of the edge counts of the two extremal components of
/// T - {e_k, e_l}. Throws GraphError if t is not a tree.
IndexReport tree_edge_hyper_wiener(const Graph& t);

} // namespace ewi
