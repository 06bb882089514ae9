#pragma once

// Interleaved circulant NHT construction, Gram analysis, modulus discovery,
// normalization and the forward/inverse block transform.
//
// For a generator g of length n the 2n x 2n circulant N has first row
// [g0, 0, g1, 0, ..., g(n-1), 0]. Entry (i, j) of N N^T depends only on the
// shift d = (j - i) mod 2n: it is the sum of squares when d = 0, zero when d
// is odd, and the circular lag sum S(d / 2) of g otherwise.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nht/integer.hpp"
#include "nht/kernels.hpp"
#include "nht/sequence.hpp"

namespace nht {

class CirculantNHT {
public:
    explicit CirculantNHT(GeneratorSequence generator);

    const GeneratorSequence& generator() const noexcept { return generator_; }
    std::size_t dimension() const noexcept { return 2 * generator_.size(); }

    /// [g0, 0, g1, 0, ...]
    std::vector<Int> first_row() const;
    Int at(std::size_t row, std::size_t col) const;

private:
    GeneratorSequence generator_;
};

struct GramSummary {
    std::size_t n = 0;
    Int diagonal = 0;
    /// lag_sums[k - 1] = S(k) for k = 1..n-1.
    std::vector<Int> lag_sums;

    Int lag(std::size_t k) const { return lag_sums.at(k - 1); }
};

struct OrthogonalityReport {
    Residue modulus = 0;
    Residue diagonal_residue = 0;
    /// offdiag_residues[k - 1] = S(k) mod q for k = 1..n-1.
    std::vector<Residue> offdiag_residues;
    std::optional<Residue> normalizer;
    bool modulus_is_prime = false;
    bool is_exact_identity = false;

    /// Lags k with S(k) mod q != 0.
    std::vector<std::size_t> offending_lags() const;
    bool lags_vanish() const { return offending_lags().empty(); }
};

/// Throws InvalidGenerator for the excluded inputs.
CirculantNHT build_circulant(const GeneratorSequence& g);

GramSummary gram_lag_sums(const GeneratorSequence& g);

/// Exact N N^T, computed by brute force.
kernels::IntMatrix matrix_gram(const GeneratorSequence& g);

/// Rebuilds N N^T from a GramSummary using the shift structure above.
kernels::IntMatrix gram_from_lag_sums(const GramSummary& gram);

/// gcd of S(1..n-1); 0 when every lag sum is zero.
Int discover_modulus(const GramSummary& gram);

/// (sum of squares) mod q. Throws InvalidModulus when q < 2.
Residue diagonal_residue(const GeneratorSequence& g, Residue q);

/// Smallest w in [1, q) with w^2 r = 1 (mod q), or nullopt when r^-1 is a
/// non-residue. Throws NonInvertible for r = 0 and Unsupported for composite q.
std::optional<Residue> normalizer(Residue r, Residue q);

/// Throws InvalidModulus when q < 2.
ResidueSequence reduce_mod(const GeneratorSequence& g, Residue q);

/// (w * s) mod q, elementwise.
ResidueSequence scale_mod(const ResidueSequence& s, Residue w);

/// Full orthogonality check of g against q. The normalizer is filled only
/// when q is prime and the diagonal residue is nonzero.
OrthogonalityReport check_orthogonality(const GeneratorSequence& g, Residue q);

/// G = N F mod q, with N built from the residues of s. F must have 2n
/// entries in [0, q). Throws ShapeError / InvalidInput otherwise.
std::vector<Residue> forward_transform(const ResidueSequence& s, std::span<const Residue> block);

/// F = r^-1 N^T G mod q. Throws NonInvertible when r has no inverse mod q.
std::vector<Residue> inverse_transform(const ResidueSequence& s, std::span<const Residue> block,
                                       Residue diagonal_residue);

}  // namespace nht
