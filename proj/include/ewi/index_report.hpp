#pragma once

#include <chrono>
#include <string_view>

#include "ewi/checked.hpp"

namespace ewi {

enum class Method { Naive, GenericCut, Benzenoid, Tree };

const char* to_string(Method m);

/// Edge-Wiener family of indices for one graph, with the method that produced
/// them. w_e_hat sums the endpoint-minimum distance; w_e the line-graph
/// distance; ww_star is the cut-pair term of the edge-hyper-Wiener formula.
struct IndexReport {
    u64 m = 0;
    u64 w_e = 0;
    u64 w_e_hat = 0;
    u64 ww_star = 0;
    u64 ww_e = 0;
    Method method = Method::Naive;
    std::chrono::nanoseconds elapsed{0};

    /// Throws ConsistencyError unless
    ///   w_e - w_e_hat == C(m,2),  ww_e == 2 w_e + ww_star - C(m,2),  ww_e >= w_e.
    void validate() const;

    /// Equality of the index fields, ignoring method and timing.
    bool same_indices(const IndexReport& o) const {
        return m == o.m && w_e == o.w_e && w_e_hat == o.w_e_hat && ww_star == o.ww_star && ww_e == o.ww_e;
    }
};

/// Completes a report from m, w_e_hat and ww_star using checked arithmetic.
IndexReport make_report(u64 m, u64 w_e_hat, u64 ww_star, Method method);

} // namespace ewi
