#pragma once

#include <cstdint>

#include "ewi/errors.hpp"

namespace ewi {

using u64 = std::uint64_t;

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
    return r;
}

inline u64 checked_sub(u64 a, u64 b) {
    u64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit underflow in subtraction");
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
    return r;
}

// n choose 2.
inline u64 binom2(u64 n) {
    if (n < 2) return 0;
    return (n % 2 == 0) ? checked_mul(n / 2, n - 1) : checked_mul(n, (n - 1) / 2);
}

} // namespace ewi
