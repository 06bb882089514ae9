#pragma once

// Exact integer type used for raw generator values, Gram entries and
// correlation sums. Arithmetic is overflow-checked: every operation either
// yields the exact result or throws OverflowError.

#include <cstdint>
#include <string>
#include <string_view>

#include "nht/error.hpp"

namespace nht {

using Int = __int128;
using Residue = std::uint64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Non-throwing variants for use inside parallel regions; return false on overflow.
inline bool try_add(Int a, Int b, Int& out) noexcept { return !__builtin_add_overflow(a, b, &out); }
inline bool try_mul(Int a, Int b, Int& out) noexcept { return !__builtin_mul_overflow(a, b, &out); }

/// Nonnegative remainder of a modulo q (q >= 1).
inline Residue mod_reduce(Int a, Residue q) noexcept {
    Int r = a % static_cast<Int>(q);
    if (r < 0) r += static_cast<Int>(q);
    return static_cast<Residue>(r);
}

inline bool fits_u64(Int a) noexcept {
    return a >= 0 && a <= static_cast<Int>(UINT64_MAX);
}

std::string to_string(Int value);

/// Parses an optionally signed decimal integer; throws InvalidInput on
/// malformed text and OverflowError when the value exceeds 127 bits.
Int parse_int(std::string_view text);

}  // namespace nht
