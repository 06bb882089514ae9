#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nht/integer.hpp"
#include "nht/sequence.hpp"

namespace nht {

/// How the 1/N factor of the correlation is applied.
///   raw:    C(k) = S(k) mod q
///   scaled: C(k) = N^-1 S(k) mod q  (needs gcd(N, q) = 1)
enum class Convention { raw, scaled };

std::string_view to_string(Convention c) noexcept;
/// Accepts "raw" and "scaled"; throws InvalidInput otherwise.
Convention parse_convention(std::string_view text);

enum class Execution { serial, parallel };

struct CorrelationSeries {
    std::size_t length = 0;
    Residue modulus = 0;
    Convention convention = Convention::raw;
    std::vector<Int> raw_sum;
    std::vector<Residue> residue;

    /// residue(k) / q, in [0, 1).
    double normalized(std::size_t k) const {
        return static_cast<double>(residue[k]) / static_cast<double>(modulus);
    }
};

/// Exact nonnegative rational, kept in lowest terms.
struct Rational {
    Int num = 0;
    Int den = 1;

    static Rational make(Int num, Int den);
    double to_double() const noexcept;
    /// Value * 100 rounded half-up.
    Int hundredths() const;
    /// "0.87"
    std::string to_fixed2() const;
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    bool operator==(const Rational&) const = default;
    auto operator<=>(const Rational& other) const {
        return checked_mul(num, other.den) <=> checked_mul(other.num, den);
    }
};

CorrelationSeries circular_autocorr(const ResidueSequence& s, Convention conv);

/// Both operands are reduced mod q before multiplying. Throws ShapeError on
/// length mismatch, InvalidModulus for q < 2, ConventionError when scaled is
/// requested but N is not invertible mod q.
CorrelationSeries circular_crosscorr(std::span<const Residue> a, std::span<const Residue> b,
                                     Residue q, Convention conv);

/// sum_k residue(k) / (N q).
Rational expectation_measure(const CorrelationSeries& series);

struct PairTableRow {
    std::size_t i = 0;  // 1-based source index
    std::size_t j = 0;  // 1-based target index
    Residue modulus = 0;
    Rational expectation;
    bool complementary = false;
};

/// Every ordered pair (i, j), i != j, correlated mod the modulus of i.
/// Rows are (i, j)-sorted. Fewer than two sequences gives an empty table.
std::vector<PairTableRow> pair_table(std::span<const ResidueSequence> seqs, Convention conv,
                                     Execution exec = Execution::parallel);

struct TargetValue {
    std::size_t i = 0;
    std::size_t j = 0;
    double expectation = 0.0;
};

struct DeviationEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    Residue modulus = 0;
    double target = 0.0;
    Rational expectation;
    double deviation = 0.0;          // |E - target|, unrounded
    Int rounded_deviation_hundredths = 0;  // |round2(E) - target| in hundredths
};

struct DeviationProfile {
    Convention convention = Convention::raw;
    std::vector<DeviationEntry> entries;
    /// Empty when the convention could not be evaluated (non-invertible N).
    std::optional<std::string> failure;

    double max_deviation() const;
    Int max_rounded_deviation_hundredths() const;
};

struct ConventionResolution {
    Convention chosen = Convention::raw;
    DeviationProfile raw;
    DeviationProfile scaled;

    const DeviationProfile& chosen_profile() const { return chosen == Convention::raw ? raw : scaled; }
    const DeviationProfile& rejected_profile() const { return chosen == Convention::raw ? scaled : raw; }
};

/// Evaluates the pair table under both conventions and keeps the one with
/// the smaller maximum deviation from the targets. Ties go to raw.
ConventionResolution resolve_convention(std::span<const ResidueSequence> fixtures,
                                        std::span<const TargetValue> targets);

}  // namespace nht
