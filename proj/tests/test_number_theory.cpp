#include "ffroots/number_theory.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace ffroots;

TEST_CASE("isqrt agrees with a linear scan") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK(isqrt(n) == oracle::slow_isqrt(n));
    for (std::uint64_t r : {65535ull, 65536ull, 4294967295ull}) {
        CHECK(isqrt(r * r) == r);
        CHECK(isqrt(r * r - 1) == r - 1);
    }
    CHECK(isqrt(~0ull) == 4294967295ull);
}

TEST_CASE("half_plus_sqrt_floor is the largest r with r^2 - r + 1 <= m") {
    for (std::uint64_t m = 1; m < 5000; ++m) {
        std::uint64_t r = 0;
        while ((r + 1) * (r + 1) - (r + 1) + 1 <= m) ++r;
        CHECK(half_plus_sqrt_floor(m) == r);
    }
    CHECK(half_plus_sqrt_floor(8) == 3);
    CHECK(half_plus_sqrt_floor(25) == 5);
    CHECK(half_plus_sqrt_floor(1) == 1);
}

TEST_CASE("primality and factorization") {
    for (std::uint64_t n = 0; n < 3000; ++n) CHECK(is_prime(n) == oracle::is_prime(n));
    const auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == PrimePower{2, 3});
    CHECK(f[1] == PrimePower{3, 2});
    CHECK(f[2] == PrimePower{5, 1});
    CHECK(factorize(1).empty());
    CHECK(prime_divisors(10006) == std::vector<std::uint64_t>{2, 5003});
    CHECK(primes_in_range(5, 30) == std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("totients against counting oracles") {
    CHECK(jordan_totient_2(1) == 1);
    CHECK(jordan_totient_2(10) == 72);
    CHECK(jordan_totient_2(12) == 96);
    for (std::uint64_t m = 1; m <= 80; ++m) {
        CHECK(euler_phi(m) == oracle::phi(m));
        CHECK(jordan_totient_2(m) == oracle::jordan2(m));
        CHECK(units_mod(m).size() == (m == 1 ? 0 : oracle::phi(m)));
    }
}

TEST_CASE("mod_pow and gcd3") {
    for (std::uint64_t b = 0; b < 30; ++b) {
        for (std::uint64_t e = 0; e < 30; ++e) CHECK(mod_pow(b, e, 101) == oracle::powmod(b, e, 101));
    }
    CHECK(mod_pow(3, 1000000006, 1000000007) == oracle::powmod(3, 1000000006, 1000000007));
    CHECK(gcd3(6, 4, 12) == 2);
    CHECK(gcd3(5, 2, 6) == 1);
    CHECK(gcd3(8, 4, 100) == 4);
}
