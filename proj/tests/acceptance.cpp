// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nht/cli.hpp"
#include "nht/core.hpp"
#include "nht/correlation.hpp"
#include "nht/csv.hpp"
#include "nht/fixtures.hpp"
#include "nht/number_theory.hpp"
#include "nht/search.hpp"
#include "oracles.hpp"

using namespace nht;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& why) {
        if (!cond) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += why;
        }
    }
};

struct Criterion {
    int id;
    const char* title;
    double time_limit_s;  // 0 = no limit
    std::function<Outcome()> body;
};

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::string join(std::span<const Residue> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

Outcome table1_orthogonality() {
    Outcome o;
    for (const auto& row : fixtures::table1()) {
        const auto gram = gram_lag_sums(row.file.generator());
        const Int q = static_cast<Int>(*row.file.modulus);
        for (std::size_t k = 1; k <= 8; ++k) {
            o.require(gram.lag(k) % q == 0, row.file.name + " lag " + std::to_string(k) + " residue " +
                                                to_string(gram.lag(k) % q));
        }
    }
    return o;
}

Outcome zero_autocorrelation() {
    Outcome o;
    for (const auto& row : fixtures::table1()) {
        for (const char* conv : {"raw", "scaled"}) {
            std::ostringstream out, err;
            const auto report = cli::run_command({"autocorr", row.file.name, "--convention", conv}, out, err);
            o.require(report.exit_status == cli::exit_ok, row.file.name + " autocorr exit " +
                                                               std::to_string(report.exit_status));
            const auto rows = parse_csv(out.str());
            o.require(rows.size() == 17, row.file.name + " expected 16 lags");
            for (std::size_t k = 2; k < rows.size(); ++k) {
                o.require(rows[k][2] == "0", row.file.name + " " + conv + " lag " + rows[k][0] + " residue " + rows[k][2]);
            }
        }
    }
    return o;
}

Outcome diagonal_residues() {
    Outcome o;
    o.require(gram_lag_sums(fixtures::table1()[0].file.generator()).diagonal == 39779747, "example1 sum of squares");
    std::string summary;
    for (const auto& row : fixtures::table1()) {
        const Residue q = *row.file.modulus;
        const auto rep = check_orthogonality(row.file.generator(), q);
        if (row.file.name == "example1") o.require(rep.diagonal_residue == 1, "example1 r != 1");
        summary += row.file.name + ": r=" + std::to_string(rep.diagonal_residue);
        if (rep.diagonal_residue != 1) {
            if (rep.normalizer) {
                const Residue w = *rep.normalizer;
                o.require(mul_mod(mul_mod(w, w, q), rep.diagonal_residue, q) == 1, row.file.name + " bad normalizer");
                summary += " w=" + std::to_string(w);
            } else {
                summary += " (flagged: no normalizer)";
            }
        }
        summary += "  ";
    }
    o.detail = o.pass ? summary : o.detail;
    return o;
}

Outcome transform_round_trip() {
    Outcome o;
    std::mt19937_64 rng(20131021);
    for (const auto& row : fixtures::table1()) {
        const ResidueSequence s = row.file.residues();
        const Residue r = diagonal_residue(s.as_generator(), s.modulus());
        std::vector<Residue> block(32);
        for (int t = 0; t < 100; ++t) {
            for (auto& x : block) x = rng() % s.modulus();
            if (inverse_transform(s, forward_transform(s, block), r) != block) {
                o.require(false, row.file.name + " round trip failed on block " + std::to_string(t));
                break;
            }
        }
    }
    return o;
}

ConventionResolution resolved() {
    return resolve_convention(fixtures::pair_table_inputs(), fixtures::table2());
}

Outcome table2_reproduction() {
    Outcome o;
    const auto res = resolved();
    const auto& used = res.chosen_profile();
    o.require(!used.failure, "chosen convention not evaluable");
    o.require(used.entries.size() == 12, "expected 12 entries");
    for (const auto& e : used.entries) {
        o.require(e.rounded_deviation_hundredths <= 1,
                  std::to_string(e.i) + "," + std::to_string(e.j) + " got " + e.expectation.to_fixed2());
    }
    for (const auto* p : {&res.raw, &res.scaled}) {
        std::ostringstream csv;
        emit_deviation_csv(*p, csv);
        write_file_atomic("acceptance_deviations_" + std::string(to_string(p->convention)) + ".csv", csv.str());
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "chosen %s, max |dE| %.4f (rounded %d/100); rejected %s max |dE| %.4f (archived)",
                  std::string(to_string(res.chosen)).c_str(), used.max_deviation(),
                  static_cast<int>(used.max_rounded_deviation_hundredths()),
                  std::string(to_string(res.rejected_profile().convention)).c_str(),
                  res.rejected_profile().max_deviation());
    if (o.pass) o.detail = buf;
    return o;
}

Outcome complementarity() {
    Outcome o;
    const auto conv = resolved().chosen;
    const auto rows = pair_table(fixtures::pair_table_inputs(), conv);
    auto e = [&](std::size_t i, std::size_t j) {
        for (const auto& r : rows)
            if (r.i == i && r.j == j) return r.expectation;
        return Rational{};
    };
    const Rational lo{95, 100}, hi{111, 100};
    std::string summary;
    for (auto [i, j] : {std::pair{1, 3}, {2, 3}, {2, 4}}) {
        const Rational sum = e(i, j) + e(j, i);
        o.require(lo <= sum && sum <= hi, "E(" + std::to_string(i) + "," + std::to_string(j) + ")+E(" +
                                              std::to_string(j) + "," + std::to_string(i) + ") = " +
                                              format_fixed(sum.num, sum.den, 4));
        summary += "(" + std::to_string(i) + "," + std::to_string(j) + ") " + format_fixed(sum.num, sum.den, 4) + "  ";
    }
    if (o.pass) o.detail = summary;
    return o;
}

Outcome search_reproduction() {
    Outcome o;
    std::ostringstream out, err;
    const auto report = cli::run_command({"search", "--seeds", "2,3,11,13", "--n", "16", "--prime-only"}, out, err);
    o.require(report.exit_status == cli::exit_ok, "search exit " + std::to_string(report.exit_status));
    const auto rows = parse_csv(out.str());
    o.require(rows.size() == 5, "expected 4 candidates");
    if (rows.size() != 5) return o;
    const std::vector<std::string> moduli{"331", "3121", "47", "1987"};
    const std::vector<std::size_t> table_rows{4, 3, 5, 6};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& cells = rows[i + 1];
        o.require(cells[4] == moduli[i], "seed " + cells[0] + " modulus " + cells[4]);
        const auto expected = join(fixtures::table1()[table_rows[i] - 1].file.residues().values());
        o.require(cells[9] == expected, "seed " + cells[0] + " reduced row differs");
    }
    return o;
}

// Literal n = 16 off-diagonal expressions, lags 8 down to 1.
std::vector<Int> literal_expressions(std::span<const Int> v) {
    const Int a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5], g = v[6], h = v[7], i = v[8], j = v[9],
              k = v[10], l = v[11], m = v[12], n = v[13], o = v[14], p = v[15];
    return {
        2 * (a * i + b * j + c * k + d * l + e * m + f * n + g * o + h * p),
        a * (h + j) + b * (i + k) + c * (j + l) + d * (k + m) + e * (l + n) + f * (m + o) + g * (n + p) + p * i + o * h,
        a * (g + k) + b * (h + l) + c * (i + m) + d * (j + n) + e * (k + o) + f * (l + p) + g * m + h * n + i * o + j * p,
        a * (f + l) + b * (g + m) + c * (h + n) + d * (i + o) + e * (j + p) + k * (f + p) + g * l + h * m + i * n + j * o,
        a * (e + m) + b * (f + n) + c * (g + o) + d * (h + p) + i * (e + m) + j * (f + n) + k * (g + o) + l * (h + p),
        a * (d + n) + b * (e + o) + c * (f + p) + g * (d + j) + h * (e + k) + i * (f + l) + m * (j + p) + k * n + l * o,
        a * (c + o) + b * (d + p) + e * (c + g) + f * (d + h) + i * (g + k) + j * (h + l) + m * (k + o) + n * (l + p),
        a * b + b * c + c * d + d * e + e * f + f * g + g * h + h * i + i * j + j * k + k * l + l * m + m * n + n * o +
            o * p + p * a,
    };
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(1310);
    std::size_t literal_checks = 0;
    auto check_literals = [&](const GeneratorSequence& g) {
        const auto gram = gram_lag_sums(g);
        const auto lit = literal_expressions(g.values());
        for (std::size_t t = 0; t < 8; ++t) {
            const std::size_t lag = 8 - t;
            o.require(lit[t] == gram.lag(lag), "literal expression for lag " + std::to_string(lag));
        }
        ++literal_checks;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 15;
        std::vector<Int> values(n);
        for (auto& v : values) v = static_cast<Int>(rng() % (1 << 16));
        values[rng() % n] |= 1;
        const GeneratorSequence g(values);
        const auto full = matrix_gram(g);
        const auto rebuilt = gram_from_lag_sums(gram_lag_sums(g));
        o.require(full == rebuilt, "trial " + std::to_string(trial) + " n=" + std::to_string(n));
        // Reverse direction: lag sums read back out of the explicit product.
        const auto brute = oracle::gram(values);
        for (std::size_t k = 1; k < n; ++k) {
            o.require(brute[0][2 * k] == gram_lag_sums(g).lag(k), "brute lag " + std::to_string(k));
        }
        if (n == 16) check_literals(g);
    }
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> values(16);
        for (auto& v : values) v = static_cast<Int>(rng() % (1 << 16));
        values[0] |= 1;
        check_literals(GeneratorSequence(values));
    }
    for (const auto& row : fixtures::table1()) check_literals(row.file.generator());
    if (o.pass) o.detail = "200 random generators; literal n=16 forms checked on " + std::to_string(literal_checks);
    return o;
}

Outcome direction_symmetry() {
    Outcome o;
    const auto seqs = fixtures::pair_table_inputs();
    const auto table = pair_table(seqs, Convention::raw);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j) continue;
            for (const auto* src : {&seqs[i], &seqs[j]}) {
                const Residue q = src->modulus();
                const auto ab = expectation_measure(circular_crosscorr(seqs[i].values(), seqs[j].values(), q, Convention::raw));
                const auto ba = expectation_measure(circular_crosscorr(seqs[j].values(), seqs[i].values(), q, Convention::raw));
                o.require(ab == ba, "swap changes E for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") mod " + std::to_string(q));
            }
            // The published (j, i) value is the (i, j) correlation taken modulo n_j.
            const auto& mirror = *std::find_if(table.begin(), table.end(),
                                               [&](const auto& r) { return r.i == j + 1 && r.j == i + 1; });
            const auto at_nj = expectation_measure(
                circular_crosscorr(seqs[i].values(), seqs[j].values(), seqs[j].modulus(), Convention::raw));
            o.require(mirror.expectation == at_nj, "asymmetry not explained by modulus for pair " +
                                                       std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
    }
    return o;
}

Outcome twelve_point_pipeline() {
    Outcome o;
    const auto chain = doubling_chain(7, 6);
    const auto c = evaluate_candidate(chain, false);
    const Int oracle_gcd = oracle::gram_gcd({7, 2, 4, 8, 16, 32});
    o.require(c.gcd == oracle_gcd, "gcd " + to_string(c.gcd) + " vs oracle " + to_string(oracle_gcd));
    o.require(c.gcd == 54, "gcd " + to_string(c.gcd));
    o.require(c.gcd_factors == Factorization{{2, 1}, {3, 3}}, "factorization " + format_factorization(c.gcd_factors));
    o.require(c.valid, "candidate invalid");
    if (o.pass) {
        o.detail = "gcd " + to_string(c.gcd) + " = " + format_factorization(c.gcd_factors) + ", diagonal residue " +
                   std::to_string(c.diagonal_residue) + " mod " + std::to_string(c.modulus);
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Table 1 orthogonality (all rows, lags 1-8)", 1.0, table1_orthogonality},
        {2, "zero autocorrelation at nonzero lags, both conventions", 0.0, zero_autocorrelation},
        {3, "diagonal residues and normalizers", 0.0, diagonal_residues},
        {4, "transform round trip, 100 blocks per row", 2.0, transform_round_trip},
        {5, "Table 2 reproduction within 0.01", 1.0, table2_reproduction},
        {6, "complementary pairs in [0.95, 1.11]", 0.0, complementarity},
        {7, "search reproduces Table 1 rows 4, 3, 5, 6", 1.0, search_reproduction},
        {8, "Gram oracle equivalence and literal n=16 forms", 0.0, oracle_equivalence},
        {9, "direction symmetry at fixed modulus", 0.0, direction_symmetry},
        {10, "12-point pipeline", 0.0, twelve_point_pipeline},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            o.pass = false;
            o.detail += " (took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s)";
        }
        if (!o.pass) ++failures;
        std::printf("[%s] criterion %2d: %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
