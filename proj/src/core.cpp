#include "nht/core.hpp"

#include <string>

#include "nht/number_theory.hpp"

namespace nht {

namespace {

void require_modulus(Residue q) {
    if (q < 2) throw InvalidModulus("modulus must be at least 2, got " + std::to_string(q));
}

std::vector<Residue> interleaved_row(const ResidueSequence& s) {
    std::vector<Residue> row(2 * s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) row[2 * i] = s[i];
    return row;
}

void check_block(const ResidueSequence& s, std::span<const Residue> block) {
    if (block.size() != 2 * s.size()) {
        throw ShapeError("block has " + std::to_string(block.size()) + " entries, expected " +
                         std::to_string(2 * s.size()));
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (block[i] >= s.modulus()) {
            throw InvalidInput("block entry " + std::to_string(i) + " = " + std::to_string(block[i]) +
                               " is not below modulus " + std::to_string(s.modulus()));
        }
    }
}

}  // namespace

CirculantNHT::CirculantNHT(GeneratorSequence generator) : generator_(std::move(generator)) {}

std::vector<Int> CirculantNHT::first_row() const {
    std::vector<Int> row(dimension(), 0);
    for (std::size_t i = 0; i < generator_.size(); ++i) row[2 * i] = generator_[i];
    return row;
}

Int CirculantNHT::at(std::size_t row, std::size_t col) const {
    const std::size_t dim = dimension();
    const std::size_t shift = (col + dim - row % dim) % dim;
    return shift % 2 == 0 ? generator_[shift / 2] : Int{0};
}

std::vector<std::size_t> OrthogonalityReport::offending_lags() const {
    std::vector<std::size_t> lags;
    for (std::size_t k = 0; k < offdiag_residues.size(); ++k) {
        if (offdiag_residues[k] != 0) lags.push_back(k + 1);
    }
    return lags;
}

CirculantNHT build_circulant(const GeneratorSequence& g) { return CirculantNHT(g); }

GramSummary gram_lag_sums(const GeneratorSequence& g) {
    std::vector<Int> sums = kernels::parallel::circular_lag_sums(g.values());
    GramSummary out;
    out.n = g.size();
    out.diagonal = sums[0];
    out.lag_sums.assign(sums.begin() + 1, sums.end());
    return out;
}

kernels::IntMatrix matrix_gram(const GeneratorSequence& g) {
    return kernels::parallel::circulant_gram(build_circulant(g).first_row());
}

kernels::IntMatrix gram_from_lag_sums(const GramSummary& gram) {
    const std::size_t dim = 2 * gram.n;
    kernels::IntMatrix m{dim, std::vector<Int>(dim * dim, 0)};
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t shift = (j + dim - i) % dim;
            if (shift == 0) {
                m(i, j) = gram.diagonal;
            } else if (shift % 2 == 0) {
                m(i, j) = gram.lag(shift / 2);
            }
        }
    }
    return m;
}

Int discover_modulus(const GramSummary& gram) {
    Int g = 0;
    for (Int s : gram.lag_sums) g = gcd(g, s);
    return g;
}

Residue diagonal_residue(const GeneratorSequence& g, Residue q) {
    require_modulus(q);
    Residue acc = 0;
    for (Int v : g.values()) {
        const Residue r = mod_reduce(v, q);
        acc = static_cast<Residue>((static_cast<unsigned __int128>(acc) + mul_mod(r, r, q)) % q);
    }
    return acc;
}

std::optional<Residue> normalizer(Residue r, Residue q) {
    require_modulus(q);
    if (!is_prime(q)) throw Unsupported("normalizer needs a prime modulus, " + std::to_string(q) + " is composite");
    r %= q;
    if (r == 0) throw NonInvertible("diagonal residue 0 is not invertible modulo " + std::to_string(q));
    const auto roots = sqrt_mod_prime(mod_inverse(r, q), q);
    if (!roots) return std::nullopt;
    return roots->first;
}

ResidueSequence reduce_mod(const GeneratorSequence& g, Residue q) {
    require_modulus(q);
    std::vector<Residue> out;
    out.reserve(g.size());
    for (Int v : g.values()) out.push_back(mod_reduce(v, q));
    return ResidueSequence(std::move(out), q);
}

ResidueSequence scale_mod(const ResidueSequence& s, Residue w) {
    std::vector<Residue> out;
    out.reserve(s.size());
    for (Residue v : s.values()) out.push_back(mul_mod(v, w % s.modulus(), s.modulus()));
    return ResidueSequence(std::move(out), s.modulus());
}

OrthogonalityReport check_orthogonality(const GeneratorSequence& g, Residue q) {
    require_modulus(q);
    const GramSummary gram = gram_lag_sums(g);
    OrthogonalityReport report;
    report.modulus = q;
    report.diagonal_residue = mod_reduce(gram.diagonal, q);
    report.offdiag_residues.reserve(gram.lag_sums.size());
    for (Int s : gram.lag_sums) report.offdiag_residues.push_back(mod_reduce(s, q));
    report.modulus_is_prime = is_prime(q);
    if (report.modulus_is_prime && report.diagonal_residue != 0) {
        report.normalizer = normalizer(report.diagonal_residue, q);
    }
    report.is_exact_identity = report.diagonal_residue == 1 && report.lags_vanish();
    return report;
}

std::vector<Residue> forward_transform(const ResidueSequence& s, std::span<const Residue> block) {
    check_block(s, block);
    return kernels::parallel::circulant_apply(interleaved_row(s), block, s.modulus(), false);
}

std::vector<Residue> inverse_transform(const ResidueSequence& s, std::span<const Residue> block,
                                       Residue diagonal_residue) {
    check_block(s, block);
    const Residue q = s.modulus();
    const Residue scale = mod_inverse(diagonal_residue, q);
    std::vector<Residue> out = kernels::parallel::circulant_apply(interleaved_row(s), block, q, true);
    for (Residue& v : out) v = mul_mod(v, scale, q);
    return out;
}

}  // namespace nht
