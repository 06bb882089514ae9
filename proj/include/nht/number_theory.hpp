#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nht/integer.hpp"

namespace nht {

/// gcd(0, x) = x; gcd(0, 0) = 0. Result is nonnegative.
Int gcd(Int a, Int b);

Residue mul_mod(Residue a, Residue b, Residue q) noexcept;
Residue pow_mod(Residue base, std::uint64_t exp, Residue q) noexcept;

/// Inverse of a modulo q via the extended Euclidean algorithm. Result in [1, q).
/// Throws InvalidModulus when q < 2 and NonInvertible when gcd(a, q) != 1.
Residue mod_inverse(Int a, Residue q);

/// Deterministic Miller-Rabin. Exact for every 64-bit input (bases are the
/// first twelve primes, which cover all n < 3.3e24).
bool is_prime(std::uint64_t q) noexcept;

/// Both square roots {x, q - x} of a modulo prime q, smaller first, or
/// nullopt when a is a non-residue. a = 0 yields {0, 0}. Tonelli-Shanks.
/// Throws Unsupported when q is not prime.
std::optional<std::pair<Residue, Residue>> sqrt_mod_prime(Residue a, Residue q);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

/// Complete factorization for any x in [1, 2^64), primes ascending.
/// Trial division by small primes, then Pollard-Brent rho.
/// Throws InvalidInput for x = 0.
Factorization factorize_small(std::uint64_t x);

/// "2^2*3*11*331"; "1" for the empty factorization.
std::string format_factorization(const Factorization& f);

}  // namespace nht
