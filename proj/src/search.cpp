#include "nht/search.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <string>

#include "nht/core.hpp"

namespace nht {

GeneratorSequence doubling_chain(Int seed, std::size_t n, Int chain_start) {
    if (n < 2) throw InvalidInput("chain length must be at least 2, got " + std::to_string(n));
    if (seed < 2) throw InvalidInput("chain seed must be at least 2, got " + to_string(seed));
    if (chain_start < 1) throw InvalidInput("chain start must be positive, got " + to_string(chain_start));
    std::vector<Int> values;
    values.reserve(n);
    values.push_back(seed);
    Int v = chain_start;
    for (std::size_t i = 1; i < n; ++i) {
        values.push_back(v);
        if (i + 1 < n) v = checked_mul(v, 2);
    }
    return GeneratorSequence(std::move(values));
}

SearchCandidate evaluate_candidate(const GeneratorSequence& raw, bool prime_only) {
    SearchCandidate c{.seed = raw[0], .n = raw.size(), .raw = raw};
    GramSummary gram;
    try {
        gram = gram_lag_sums(raw);
    } catch (const OverflowError& e) {
        c.diagnostics.push_back(std::string("lag sums: ") + e.what());
        return c;
    }
    c.gcd = discover_modulus(gram);
    if (c.gcd == 0) {
        c.diagnostics.push_back("all lag sums are zero: generator is orthogonal over the integers");
        return c;
    }
    if (c.gcd == 1) {
        c.diagnostics.push_back("gcd of lag sums is 1: no modulus annihilates them");
        return c;
    }
    if (!fits_u64(c.gcd)) {
        c.diagnostics.push_back("gcd " + to_string(c.gcd) + " exceeds the 64-bit modulus range");
        return c;
    }
    const auto gcd64 = static_cast<std::uint64_t>(c.gcd);
    c.gcd_factors = factorize_small(gcd64);
    c.modulus = prime_only ? c.gcd_factors.back().prime : gcd64;
    c.modulus_is_prime = is_prime(c.modulus);

    c.diagonal_residue = mod_reduce(gram.diagonal, c.modulus);
    c.reduced = reduce_mod(raw, c.modulus);

    // Re-verify every lag independently of the gcd that produced the modulus.
    bool lags_vanish = true;
    for (std::size_t k = 1; k < raw.size(); ++k) {
        if (mod_reduce(gram.lag(k), c.modulus) != 0) {
            lags_vanish = false;
            c.diagnostics.push_back("lag " + std::to_string(k) + " does not vanish modulo " +
                                    std::to_string(c.modulus));
        }
    }

    if (!c.modulus_is_prime) {
        c.diagnostics.push_back("modulus " + std::to_string(c.modulus) + " = " + format_factorization(c.gcd_factors) +
                                " is composite; normalizer not computed");
    } else if (c.diagonal_residue == 0) {
        c.diagnostics.push_back("diagonal residue is 0; no normalizer");
    } else {
        c.normalizer = normalizer(c.diagonal_residue, c.modulus);
        if (!c.normalizer) {
            c.diagnostics.push_back("inverse of diagonal residue " + std::to_string(c.diagonal_residue) +
                                    " is a non-residue modulo " + std::to_string(c.modulus) +
                                    "; sequence left unnormalized");
        }
    }
    c.valid = c.modulus >= 2 && lags_vanish;
    return c;
}

SearchResult search_seeds(std::span<const std::uint64_t> seeds, const SearchOptions& options) {
    SearchResult result;
    std::vector<std::uint64_t> ordered(seeds.begin(), seeds.end());
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    std::vector<std::uint64_t> primes;
    for (std::uint64_t s : ordered) {
        if (is_prime(s)) {
            primes.push_back(s);
        } else {
            result.diagnostics.push_back("seed " + std::to_string(s) + ": not prime, skipped");
        }
    }

    const long count = static_cast<long>(primes.size());
    std::vector<std::optional<SearchCandidate>> slots(primes.size());
    std::vector<std::string> failures(primes.size());
#pragma omp parallel for schedule(dynamic) if (options.execution == Execution::parallel)
    for (long i = 0; i < count; ++i) {
        try {
            slots[i] = evaluate_candidate(doubling_chain(static_cast<Int>(primes[i]), options.n, options.chain_start),
                                          options.prime_only);
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    }

    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!failures[i].empty()) {
            result.diagnostics.push_back("seed " + std::to_string(primes[i]) + ": " + failures[i]);
            continue;
        }
        SearchCandidate& c = *slots[i];
        for (const auto& d : c.diagnostics) result.diagnostics.push_back("seed " + std::to_string(primes[i]) + ": " + d);
        if (options.valid_only && !c.valid) continue;
        result.candidates.push_back(std::move(c));
    }
    return result;
}

std::vector<std::uint64_t> random_prime_seeds(std::size_t count, std::uint64_t lo, std::uint64_t hi,
                                              std::uint64_t rng_seed) {
    if (lo > hi) throw InvalidInput("empty seed range");
    std::vector<std::uint64_t> pool;
    for (std::uint64_t v = lo; v <= hi && pool.size() <= 1'000'000; ++v) {
        if (is_prime(v)) pool.push_back(v);
        if (v == hi) break;
    }
    if (pool.size() < count) {
        throw InvalidInput("range [" + std::to_string(lo) + ", " + std::to_string(hi) + "] holds only " +
                           std::to_string(pool.size()) + " primes, " + std::to_string(count) + " requested");
    }
    std::mt19937_64 rng(rng_seed);
    // Partial Fisher-Yates with explicit index draws so the result does not
    // depend on the standard library's shuffle implementation.
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t span = pool.size() - i;
        const std::size_t pick = i + static_cast<std::size_t>(rng() % span);
        std::swap(pool[i], pool[pick]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace nht
