#include "nht/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "nht/csv.hpp"
#include "nht/kernels.hpp"
#include "nht/number_theory.hpp"

namespace nht {

std::string_view to_string(Convention c) noexcept {
    return c == Convention::raw ? "raw" : "scaled";
}

Convention parse_convention(std::string_view text) {
    if (text == "raw") return Convention::raw;
    if (text == "scaled") return Convention::scaled;
    throw InvalidInput("unknown convention '" + std::string(text) + "' (expected raw or scaled)");
}

Rational Rational::make(Int num, Int den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Int g = gcd(num, den);
    return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
}

double Rational::to_double() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
}

Int Rational::hundredths() const {
    // floor(100 num / den + 1/2), valid for num >= 0
    return checked_add(checked_mul(num, 200), den) / checked_mul(den, 2);
}

std::string Rational::to_fixed2() const { return format_fixed(num, den, 2); }

std::string Rational::to_string() const { return nht::to_string(num) + "/" + nht::to_string(den); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::make(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                          checked_mul(a.den, b.den));
}

namespace {

CorrelationSeries finish_series(std::vector<Int> raw, Residue q, Convention conv) {
    CorrelationSeries series;
    series.length = raw.size();
    series.modulus = q;
    series.convention = conv;
    series.residue.reserve(raw.size());
    Residue scale = 1;
    if (conv == Convention::scaled) {
        try {
            scale = mod_inverse(static_cast<Int>(raw.size()), q);
        } catch (const NonInvertible&) {
            throw ConventionError("scaled convention needs gcd(N, q) = 1; N = " + std::to_string(raw.size()) +
                                  ", q = " + std::to_string(q));
        }
    }
    for (Int s : raw) series.residue.push_back(mul_mod(mod_reduce(s, q), scale, q));
    series.raw_sum = std::move(raw);
    return series;
}

std::vector<Residue> reduced(std::span<const Residue> v, Residue q) {
    std::vector<Residue> out(v.begin(), v.end());
    for (Residue& x : out) x %= q;
    return out;
}

}  // namespace

CorrelationSeries circular_autocorr(const ResidueSequence& s, Convention conv) {
    return finish_series(kernels::parallel::circular_cross_sums(s.values(), s.values()), s.modulus(), conv);
}

CorrelationSeries circular_crosscorr(std::span<const Residue> a, std::span<const Residue> b, Residue q,
                                     Convention conv) {
    if (q < 2) throw InvalidModulus("modulus must be at least 2, got " + std::to_string(q));
    if (a.size() != b.size()) {
        throw ShapeError("cross-correlation operands differ in length (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
    }
    const auto ra = reduced(a, q);
    const auto rb = reduced(b, q);
    return finish_series(kernels::parallel::circular_cross_sums(ra, rb), q, conv);
}

Rational expectation_measure(const CorrelationSeries& series) {
    Int total = 0;
    for (Residue r : series.residue) total = checked_add(total, static_cast<Int>(r));
    return Rational::make(total, checked_mul(static_cast<Int>(series.length), static_cast<Int>(series.modulus)));
}

std::vector<PairTableRow> pair_table(std::span<const ResidueSequence> seqs, Convention conv, [[maybe_unused]] Execution exec) {
    std::vector<PairTableRow> rows;
    if (seqs.size() < 2) return rows;
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        for (std::size_t j = 0; j < seqs.size(); ++j) {
            if (i != j) rows.push_back({i + 1, j + 1, seqs[i].modulus(), {}, false});
        }
    }

    const long count = static_cast<long>(rows.size());
    std::vector<std::exception_ptr> errors(rows.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (long r = 0; r < count; ++r) {
        PairTableRow& row = rows[r];
        try {
            const auto& a = seqs[row.i - 1];
            const auto& b = seqs[row.j - 1];
            row.expectation = expectation_measure(circular_crosscorr(a.values(), b.values(), row.modulus, conv));
        } catch (...) {
            errors[r] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    const Rational lo{95, 100}, hi{105, 100};
    for (auto& row : rows) {
        // Rows are (i, j)-sorted, so (j, i) sits at a computable offset.
        const std::size_t k = seqs.size();
        const std::size_t mirror = (row.j - 1) * (k - 1) + (row.i < row.j ? row.i - 1 : row.i - 2);
        const Rational sum = row.expectation + rows[mirror].expectation;
        row.complementary = lo <= sum && sum <= hi;
    }
    return rows;
}

double DeviationProfile::max_deviation() const {
    if (failure) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, e.deviation);
    return m;
}

Int DeviationProfile::max_rounded_deviation_hundredths() const {
    if (failure) return std::numeric_limits<long long>::max();
    Int m = 0;
    for (const auto& e : entries) m = std::max(m, e.rounded_deviation_hundredths);
    return m;
}

namespace {

DeviationProfile profile_for(std::span<const ResidueSequence> fixtures, std::span<const TargetValue> targets,
                             Convention conv) {
    DeviationProfile profile;
    profile.convention = conv;
    std::vector<PairTableRow> rows;
    try {
        rows = pair_table(fixtures, conv);
    } catch (const ConventionError& e) {
        profile.failure = e.what();
        return profile;
    }
    for (const auto& t : targets) {
        const auto it = std::find_if(rows.begin(), rows.end(),
                                     [&](const PairTableRow& r) { return r.i == t.i && r.j == t.j; });
        if (it == rows.end()) {
            throw InvalidInput("target pair (" + std::to_string(t.i) + ", " + std::to_string(t.j) +
                               ") is not in the pair table");
        }
        DeviationEntry e;
        e.i = t.i;
        e.j = t.j;
        e.modulus = it->modulus;
        e.target = t.expectation;
        e.expectation = it->expectation;
        e.deviation = std::abs(it->expectation.to_double() - t.expectation);
        const Int target_h = static_cast<Int>(std::llround(t.expectation * 100.0));
        const Int diff = it->expectation.hundredths() - target_h;
        e.rounded_deviation_hundredths = diff < 0 ? -diff : diff;
        profile.entries.push_back(e);
    }
    return profile;
}

}  // namespace

ConventionResolution resolve_convention(std::span<const ResidueSequence> fixtures,
                                        std::span<const TargetValue> targets) {
    ConventionResolution res;
    res.raw = profile_for(fixtures, targets, Convention::raw);
    res.scaled = profile_for(fixtures, targets, Convention::scaled);
    res.chosen = res.scaled.max_deviation() < res.raw.max_deviation() ? Convention::scaled : Convention::raw;
    return res;
}

}  // namespace nht
