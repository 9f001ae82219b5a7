#pragma once

#include <cstdint>
#include <vector>

namespace ffroots {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Trial division; intended for the desk-scale range (below 2^40 or so).
bool is_prime(std::uint64_t n) noexcept;

/// Prime factorisation by trial division, primes in increasing order.
/// factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Distinct prime divisors of n, increasing.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// floor(sqrt(n)) by integer Newton iteration.
std::uint64_t isqrt(std::uint64_t n) noexcept;

/// floor(1/2 + sqrt(m)), computed without floating point. Equivalently the
/// largest r with r^2 - r + 1 <= m (for m >= 1).
std::uint64_t half_plus_sqrt_floor(std::uint64_t m) noexcept;

std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept;

std::uint64_t euler_phi(std::uint64_t m);

/// Jordan's totient J_2(m) = m^2 * prod_{l | m} (1 - 1/l^2): the number of
/// pairs (x, y) in {1..m}^2 with gcd(x, y, m) = 1.
std::uint64_t jordan_totient_2(std::uint64_t m);

/// Units modulo m: e in [1, m) with gcd(e, m) = 1.
std::vector<std::uint64_t> units_mod(std::uint64_t m);

} // namespace ffroots
