#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nht/correlation.hpp"
#include "nht/integer.hpp"
#include "nht/number_theory.hpp"
#include "nht/sequence.hpp"

namespace nht {

struct SearchCandidate {
    Int seed = 0;
    std::size_t n = 0;
    GeneratorSequence raw;
    Int gcd = 0;
    /// Empty when the gcd is 0 or does not fit 64 bits.
    Factorization gcd_factors{};
    Residue modulus = 0;
    bool modulus_is_prime = false;
    Residue diagonal_residue = 0;
    std::optional<Residue> normalizer{};
    std::optional<ResidueSequence> reduced{};
    bool valid = false;
    std::vector<std::string> diagnostics{};
};

/// [seed, start, 2 start, 4 start, ...] of length n. Throws InvalidInput
/// when n < 2 or seed < 2, OverflowError when the chain does not fit.
GeneratorSequence doubling_chain(Int seed, std::size_t n, Int chain_start = 2);

/// Runs the gcd modulus discovery on one generator. The modulus is the gcd
/// itself, or its largest prime factor when prime_only is set. Never throws
/// for a valid generator; problems are reported through `valid` and
/// `diagnostics`.
SearchCandidate evaluate_candidate(const GeneratorSequence& raw, bool prime_only);

struct SearchOptions {
    std::size_t n = 16;
    bool prime_only = false;
    Int chain_start = 2;
    bool valid_only = false;
    Execution execution = Execution::parallel;
};

struct SearchResult {
    std::vector<SearchCandidate> candidates;
    std::vector<std::string> diagnostics;
};

/// Evaluates the doubling chain of every prime seed, ascending and
/// deduplicated. Non-prime seeds are skipped with a diagnostic. The output
/// does not depend on the execution policy.
SearchResult search_seeds(std::span<const std::uint64_t> seeds, const SearchOptions& options);

/// `count` distinct primes drawn uniformly from [lo, hi] with a seeded
/// mt19937_64, returned ascending. Throws InvalidInput if the range holds
/// fewer than `count` primes.
std::vector<std::uint64_t> random_prime_seeds(std::size_t count, std::uint64_t lo, std::uint64_t hi,
                                              std::uint64_t rng_seed);

}  // namespace nht
