#include "ewi/index_report.hpp"

#include <string>

namespace ewi {

const char* to_string(Method m) {
    switch (m) {
    case Method::Naive: return "naive";
    case Method::GenericCut: return "generic-cut";
    case Method::Benzenoid: return "benzenoid";
    case Method::Tree: return "tree";
    }
    return "unknown";
}

void IndexReport::validate() const {
    const u64 pairs = binom2(m);
    if (w_e < w_e_hat || w_e - w_e_hat != pairs)
        throw ConsistencyError("report violates W_e - W_e_hat = C(m,2): W_e=" + std::to_string(w_e) +
                               " W_e_hat=" + std::to_string(w_e_hat) + " m=" + std::to_string(m));
    const u64 lhs = checked_add(ww_e, pairs);
    const u64 rhs = checked_add(checked_mul(2, w_e), ww_star);
    if (lhs != rhs)
        throw ConsistencyError("report violates WW_e = 2 W_e + WW_e* - C(m,2): WW_e=" + std::to_string(ww_e));
    if (ww_e < w_e) throw ConsistencyError("report violates WW_e >= W_e");
}

IndexReport make_report(u64 m, u64 w_e_hat, u64 ww_star, Method method) {
    IndexReport r;
    r.m = m;
    r.w_e_hat = w_e_hat;
    r.w_e = checked_add(w_e_hat, binom2(m));
    r.ww_star = ww_star;
    r.ww_e = checked_sub(checked_add(checked_mul(2, r.w_e), ww_star), binom2(m));
    r.method = method;
    return r;
}

} // namespace ewi
