#include "nht/kernels.hpp"

#include <string>

namespace nht::kernels::serial {

std::vector<Int> circular_lag_sums(std::span<const Int> g) {
    const std::size_t n = g.size();
    std::vector<Int> out(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        Int acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc = checked_add(acc, checked_mul(g[j], g[(j + k) % n]));
        }
        out[k] = acc;
    }
    return out;
}

std::vector<Int> circular_cross_sums(std::span<const Residue> a, std::span<const Residue> b) {
    if (a.size() != b.size()) {
        throw ShapeError("cross-correlation operands differ in length (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
    }
    const std::size_t n = a.size();
    std::vector<Int> out(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        Int acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc = checked_add(acc, checked_mul(static_cast<Int>(a[j]), static_cast<Int>(b[(j + k) % n])));
        }
        out[k] = acc;
    }
    return out;
}

std::vector<Residue> circulant_apply(std::span<const Residue> first_row, std::span<const Residue> x,
                                     Residue q, bool transposed) {
    const std::size_t dim = first_row.size();
    if (x.size() != dim) {
        throw ShapeError("block has " + std::to_string(x.size()) + " entries, expected " + std::to_string(dim));
    }
    std::vector<Residue> y(dim, 0);
    for (std::size_t r = 0; r < dim; ++r) {
        unsigned __int128 acc = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            // C[r][c] = first_row[(c - r) mod dim]; C^T[r][c] = C[c][r].
            const std::size_t idx = transposed ? (r + dim - c) % dim : (c + dim - r) % dim;
            acc = (acc + static_cast<unsigned __int128>(first_row[idx]) * x[c]) % q;
        }
        y[r] = static_cast<Residue>(acc);
    }
    return y;
}

IntMatrix circulant_gram(std::span<const Int> first_row) {
    const std::size_t dim = first_row.size();
    IntMatrix c{dim, std::vector<Int>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t col = 0; col < dim; ++col) c(r, col) = first_row[(col + dim - r) % dim];
    }
    IntMatrix out{dim, std::vector<Int>(dim * dim, 0)};
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < dim; ++k) acc = checked_add(acc, checked_mul(c(i, k), c(j, k)));
            out(i, j) = acc;
        }
    }
    return out;
}

}  // namespace nht::kernels::serial
