#include "ffroots/number_theory.hpp"

#include <numeric>

namespace ffroots {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
    if (n < 2) return n;
    // Newton from an overestimate decreases monotonically to floor(sqrt(n)).
    std::uint64_t x = n;
    std::uint64_t y = x / 2 + (x & 1);
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

std::uint64_t half_plus_sqrt_floor(std::uint64_t m) noexcept {
    // floor(1/2 + sqrt(m)) = floor((1 + sqrt(4m)) / 2) = (1 + isqrt(4m)) / 2.
    return (1 + isqrt(4 * m)) / 2;
}

std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
    return std::gcd(std::gcd(a, b), c);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept {
    if (mod == 1) return 0;
    unsigned __int128 result = 1;
    unsigned __int128 b = base % mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t result = m;
    for (auto l : prime_divisors(m)) result = result / l * (l - 1);
    return result;
}

std::uint64_t jordan_totient_2(std::uint64_t m) {
    std::uint64_t result = m * m;
    for (auto l : prime_divisors(m)) result = result / (l * l) * (l * l - 1);
    return result;
}

std::vector<std::uint64_t> units_mod(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t e = 1; e < m; ++e) {
        if (std::gcd(e, m) == 1) out.push_back(e);
    }
    return out;
}

} // namespace ffroots
