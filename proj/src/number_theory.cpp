#include "nht/number_theory.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

namespace nht {

namespace {

using u128 = unsigned __int128;

Int abs_int(Int a) {
    if (a < 0) {
        Int r;
        if (__builtin_sub_overflow(Int{0}, a, &r)) throw OverflowError("gcd operand out of range");
        return r;
    }
    return a;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    // Deterministic sequence of (c, y0) starts; retried until a factor appears.
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        constexpr std::uint64_t m = 128;
        std::uint64_t r = 1;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

Int gcd(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Residue mul_mod(Residue a, Residue b, Residue q) noexcept {
    return static_cast<Residue>(static_cast<u128>(a) * b % q);
}

Residue pow_mod(Residue base, std::uint64_t exp, Residue q) noexcept {
    if (q == 1) return 0;
    Residue result = 1;
    base %= q;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, q);
        base = mul_mod(base, base, q);
        exp >>= 1U;
    }
    return result;
}

Residue mod_inverse(Int a, Residue q) {
    if (q < 2) throw InvalidModulus("modulus must be at least 2, got " + std::to_string(q));
    Int old_r = mod_reduce(a, q), r = static_cast<Int>(q);
    Int old_s = 1, s = 0;
    while (r != 0) {
        const Int quotient = old_r / r;
        Int tmp = old_r - quotient * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quotient * s;
        old_s = s;
        s = tmp;
    }
    // old_r = gcd(old_r0, q); old_s is the Bezout coefficient of the reduced a.
    if (old_r != 1) {
        throw NonInvertible(to_string(a) + " has no inverse modulo " + std::to_string(q));
    }
    return mod_reduce(old_s, q);
}

bool is_prime(std::uint64_t q) noexcept {
    if (q < 2) return false;
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : bases) {
        if (q % p == 0) return q == p;
    }
    std::uint64_t d = q - 1;
    const unsigned s = static_cast<unsigned>(std::countr_zero(d));
    d >>= s;
    return std::none_of(bases.begin(), bases.end(),
                        [&](std::uint64_t a) { return miller_rabin_witness(q, a, d, s); });
}

std::optional<std::pair<Residue, Residue>> sqrt_mod_prime(Residue a, Residue q) {
    if (!is_prime(q)) {
        throw Unsupported("square roots are only supported modulo a prime, " + std::to_string(q) +
                          " is composite");
    }
    a %= q;
    if (a == 0) return std::pair<Residue, Residue>{0, 0};
    if (q == 2) return std::pair<Residue, Residue>{1, 1};
    if (pow_mod(a, (q - 1) / 2, q) != 1) return std::nullopt;

    Residue root;
    if (q % 4 == 3) {
        root = pow_mod(a, (q + 1) / 4, q);
    } else {
        // Tonelli-Shanks: q - 1 = odd * 2^s.
        std::uint64_t odd = q - 1;
        unsigned s = static_cast<unsigned>(std::countr_zero(odd));
        odd >>= s;
        Residue z = 2;
        while (pow_mod(z, (q - 1) / 2, q) != q - 1) ++z;
        Residue c = pow_mod(z, odd, q);
        Residue t = pow_mod(a, odd, q);
        root = pow_mod(a, (odd + 1) / 2, q);
        unsigned m = s;
        while (t != 1) {
            unsigned i = 0;
            Residue t2 = t;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, q);
                ++i;
            }
            Residue b = c;
            for (unsigned k = 0; k + 1 < m - i; ++k) b = mul_mod(b, b, q);
            root = mul_mod(root, b, q);
            c = mul_mod(b, b, q);
            t = mul_mod(t, c, q);
            m = i;
        }
    }
    const Residue other = q - root;
    return std::pair<Residue, Residue>{std::min(root, other), std::max(root, other)};
}

Factorization factorize_small(std::uint64_t x) {
    if (x == 0) throw InvalidInput("cannot factorize 0");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p < 1000 && p * p <= x; ++p) {
        while (x % p == 0) {
            primes.push_back(p);
            x /= p;
        }
    }
    factor_into(x, primes);
    std::sort(primes.begin(), primes.end());

    Factorization out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().prime == p) {
            ++out.back().exponent;
        } else {
            out.push_back({p, 1});
        }
    }
    return out;
}

std::string format_factorization(const Factorization& f) {
    if (f.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : f) {
        if (!s.empty()) s += '*';
        s += std::to_string(p);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

}  // namespace nht
