#pragma once

// Brute-force reference computations used only by tests. None of these call
// into the library's kernels; they follow the textbook definitions directly.

#include <cstdint>
#include <optional>
#include <vector>

#include "nht/integer.hpp"

namespace oracle {

using nht::Int;

using Matrix = std::vector<std::vector<Int>>;

/// Explicit 2n x 2n circulant: row r is the interleaved first row shifted right by r.
inline Matrix circulant(const std::vector<Int>& g) {
    const std::size_t dim = 2 * g.size();
    std::vector<Int> row(dim, 0);
    for (std::size_t i = 0; i < g.size(); ++i) row[2 * i] = g[i];
    Matrix m(dim, std::vector<Int>(dim));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m[r][(c + r) % dim] = row[c];
    return m;
}

/// mul = matrix * transpose, written out as the transpose-then-multiply steps.
inline Matrix gram(const std::vector<Int>& g) {
    const Matrix m = circulant(g);
    const std::size_t dim = m.size();
    Matrix t(dim, std::vector<Int>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) t[j][i] = m[i][j];
    Matrix mul(dim, std::vector<Int>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) mul[i][j] += m[i][k] * t[k][j];
    return mul;
}

/// Euclid in the remainder-loop form; gcd(0, x) = x.
inline Int euclid(Int a, Int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    while (a % b != 0) {
        Int x = b;
        Int y = a % b;
        a = x;
        b = y;
    }
    return b;
}

/// gcd of every off-diagonal entry of the explicit Gram matrix.
inline Int gram_gcd(const std::vector<Int>& g) {
    const Matrix mul = gram(g);
    Int acc = 0;
    for (std::size_t i = 0; i < mul.size(); ++i)
        for (std::size_t j = 0; j < mul.size(); ++j)
            if (i != j && mul[i][j] != 0) acc = euclid(acc, mul[i][j]);
    return acc;
}

inline bool trial_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

inline std::optional<std::uint64_t> inverse_by_search(std::uint64_t a, std::uint64_t q) {
    for (std::uint64_t x = 1; x < q; ++x)
        if ((a % q) * x % q == 1) return x;
    return std::nullopt;
}

inline std::vector<std::uint64_t> roots_by_search(std::uint64_t a, std::uint64_t q) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < q; ++x)
        if (x * x % q == a % q) out.push_back(x);
    return out;
}

inline std::vector<Int> matvec_mod(const Matrix& m, const std::vector<std::uint64_t>& x, std::uint64_t q) {
    std::vector<Int> y(m.size(), 0);
    for (std::size_t r = 0; r < m.size(); ++r) {
        Int acc = 0;
        for (std::size_t c = 0; c < m.size(); ++c) acc = (acc + (m[r][c] % q) * static_cast<Int>(x[c])) % q;
        y[r] = acc;
    }
    return y;
}

}  // namespace oracle
