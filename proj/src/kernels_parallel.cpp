#include "nht/kernels.hpp"

#include <atomic>
#include <string>

#ifdef NHT_HAVE_OPENMP
#include <omp.h>
#endif

namespace nht::kernels {

namespace {

// Below this many outer iterations the fork/join cost dominates.
constexpr long parallel_threshold = 64;

using u128 = unsigned __int128;

}  // namespace

int max_threads() noexcept {
#ifdef NHT_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace parallel {

std::vector<Int> circular_lag_sums(std::span<const Int> g) {
    const long n = static_cast<long>(g.size());
    std::vector<Int> out(g.size(), 0);
    std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(static) if (n >= parallel_threshold)
    for (long k = 0; k < n; ++k) {
        Int acc = 0;
        for (long j = 0; j < n; ++j) {
            Int term;
            if (!try_mul(g[j], g[(j + k) % n], term) || !try_add(acc, term, acc)) {
                overflow.store(true, std::memory_order_relaxed);
                break;
            }
        }
        out[k] = acc;
    }
    if (overflow.load()) throw OverflowError("integer overflow in circular lag sums");
    return out;
}

std::vector<Int> circular_cross_sums(std::span<const Residue> a, std::span<const Residue> b) {
    if (a.size() != b.size()) {
        throw ShapeError("cross-correlation operands differ in length (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
    }
    const long n = static_cast<long>(a.size());
    std::vector<Int> out(a.size(), 0);
    std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(static) if (n >= parallel_threshold)
    for (long k = 0; k < n; ++k) {
        Int acc = 0;
        for (long j = 0; j < n; ++j) {
            Int term;
            if (!try_mul(static_cast<Int>(a[j]), static_cast<Int>(b[(j + k) % n]), term) ||
                !try_add(acc, term, acc)) {
                overflow.store(true, std::memory_order_relaxed);
                break;
            }
        }
        out[k] = acc;
    }
    if (overflow.load()) throw OverflowError("integer overflow in cross-correlation sums");
    return out;
}

std::vector<Residue> circulant_apply(std::span<const Residue> first_row, std::span<const Residue> x,
                                     Residue q, bool transposed) {
    const long dim = static_cast<long>(first_row.size());
    if (x.size() != first_row.size()) {
        throw ShapeError("block has " + std::to_string(x.size()) + " entries, expected " + std::to_string(dim));
    }
    std::vector<Residue> y(first_row.size(), 0);
#pragma omp parallel for schedule(static) if (dim >= parallel_threshold)
    for (long r = 0; r < dim; ++r) {
        u128 acc = 0;
        for (long c = 0; c < dim; ++c) {
            const long idx = transposed ? (r - c + dim) % dim : (c - r + dim) % dim;
            acc = (acc + static_cast<u128>(first_row[idx]) * x[c]) % q;
        }
        y[r] = static_cast<Residue>(acc);
    }
    return y;
}

IntMatrix circulant_gram(std::span<const Int> first_row) {
    const long dim = static_cast<long>(first_row.size());
    IntMatrix out{first_row.size(), std::vector<Int>(first_row.size() * first_row.size(), 0)};
    std::atomic<bool> overflow{false};
    // (C C^T)(i, j) = sum_k C[i][k] C[j][k], with C[r][k] = first_row[(k - r) mod dim].
#pragma omp parallel for schedule(static) if (dim >= parallel_threshold)
    for (long i = 0; i < dim; ++i) {
        for (long j = 0; j < dim; ++j) {
            Int acc = 0;
            for (long k = 0; k < dim; ++k) {
                Int term;
                if (!try_mul(first_row[(k - i + dim) % dim], first_row[(k - j + dim) % dim], term) ||
                    !try_add(acc, term, acc)) {
                    overflow.store(true, std::memory_order_relaxed);
                    break;
                }
            }
            out(i, j) = acc;
        }
    }
    if (overflow.load()) throw OverflowError("integer overflow in Gram product");
    return out;
}

}  // namespace parallel

}  // namespace nht::kernels
