#pragma once

// Data-parallel inner loops. Each kernel exists twice: a plain serial
// reference in `serial` and an OpenMP version in `parallel`. The library
// calls the parallel versions; tests and the benchmark compare the two.
// All kernels are exact and throw OverflowError instead of wrapping.

#include <cstddef>
#include <span>
#include <vector>

#include "nht/integer.hpp"

namespace nht::kernels {

/// Dense row-major square matrix of exact integers.
struct IntMatrix {
    std::size_t dim = 0;
    std::vector<Int> data;

    Int operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
    Int& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    bool operator==(const IntMatrix&) const = default;
};

namespace serial {

/// out[k] = sum_j g[j] * g[(j + k) mod n] for k in [0, n). out[0] is the sum of squares.
std::vector<Int> circular_lag_sums(std::span<const Int> g);

/// out[k] = sum_j a[j] * b[(j + k) mod N] for k in [0, N). Sizes must match.
std::vector<Int> circular_cross_sums(std::span<const Residue> a, std::span<const Residue> b);

/// y = C x mod q (or C^T x when transposed) where C is the circulant whose
/// row r is first_row shifted right by r. Inputs must be reduced mod q.
std::vector<Residue> circulant_apply(std::span<const Residue> first_row, std::span<const Residue> x,
                                     Residue q, bool transposed);

/// Brute-force C * C^T of the circulant with the given first row.
IntMatrix circulant_gram(std::span<const Int> first_row);

}  // namespace serial

namespace parallel {

std::vector<Int> circular_lag_sums(std::span<const Int> g);
std::vector<Int> circular_cross_sums(std::span<const Residue> a, std::span<const Residue> b);
std::vector<Residue> circulant_apply(std::span<const Residue> first_row, std::span<const Residue> x,
                                     Residue q, bool transposed);
IntMatrix circulant_gram(std::span<const Int> first_row);

}  // namespace parallel

/// Threads the parallel kernels will use (1 when built without OpenMP).
int max_threads() noexcept;

}  // namespace nht::kernels
