#include "ffroots/error.hpp"
#include "ffroots/number_theory.hpp"
#include "ffroots/poisson_stats.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace ffroots;

TEST_CASE("T_p counts") {
    CHECK(count_Tp_formula(11) == 3400);
    CHECK(count_Tp_formula(7) == 396);
    // Strict definition at p = 7: 9 unordered exponent pairs, 36 coefficient pairs.
    CHECK(count_Tp_direct(7) == 324);
    for (auto p : primes_in_range(5, 200)) CHECK(count_Tp_direct(p) < count_Tp_formula(p));
}

TEST_CASE("effective N") {
    CHECK(effective_N(11) == Rational(85));
    CHECK(effective_N(7) == Rational(33));
    CHECK(boost::rational_cast<double>(effective_N(11)) / 121.0 == doctest::Approx(0.702479).epsilon(1e-6));
}

TEST_CASE("N(p) / p^2 lies in (1/2, 2) for 11 <= p <= 1e5 (property)") {
    for (auto p : primes_in_range(11, 100000)) {
        const Rational ratio = effective_N(p) / Rational(static_cast<std::int64_t>(p * p));
        CHECK(ratio > Rational(1, 2));
        CHECK(ratio < Rational(2));
        CHECK(effective_N(p).denominator() == 1);
    }
}

TEST_CASE("Lambert W") {
    CHECK(lambert_w(0) == 0);
    CHECK(std::abs(lambert_w(std::exp(1.0)) - 1.0) <= 1e-12);
    CHECK(std::abs(lambert_w(1.0) - 0.567143290409783873) <= 1e-9);
    // Fixed-point oracle: w = exp(-w) at x = 1.
    double w = 0.5;
    for (int i = 0; i < 200; ++i) w = std::exp(-w);
    CHECK(std::abs(lambert_w(1.0) - w) <= 1e-9);
    CHECK_THROWS_AS(lambert_w(-0.1), Error);
}

TEST_CASE("Lambert W residuals on a 1000-point grid (property)") {
    for (int i = 0; i < 1000; ++i) {
        const double x = 100.0 * i / 999.0;
        const double w = lambert_w(x);
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-10 * std::max(1.0, x));
    }
}

TEST_CASE("predictor values") {
    // Reference values from a 40-digit evaluation of the same formula.
    CHECK(predictor_E(1e4) == doctest::Approx(6.1027068711060642).epsilon(1e-12));
    CHECK(predictor_E(85) == doctest::Approx(3.5216544584810179).epsilon(1e-12));
    CHECK(predictor_E(103779390) == doctest::Approx(10.189807598061074).epsilon(1e-12));
    CHECK(simple_predictor(1e4) == doctest::Approx(4.1481913138017059).epsilon(1e-12));
    CHECK_THROWS_AS(predictor_E(10), Error);

    const auto v = predictor_values(8581);
    CHECK(v.N == Rational(103779390));
    CHECK(16.0 / v.E_N > 1.0);
    CHECK(v.J2 == jordan_totient_2(8580));
}

TEST_CASE("derangements") {
    CHECK(derangements(0) == 1);
    CHECK(derangements(1) == 0);
    CHECK(derangements(4) == 9);
    CHECK(derangements(6) == 265);
    CHECK(oracle::fixed_point_counts(4)[0] == 9);
    CHECK(oracle::fixed_point_counts(6)[0] == 265);
    for (unsigned n = 0; n <= 20; ++n) CHECK(derangements(n) == derangements_nearest(n));
    CHECK(derangements(20) == 895014631192902121ull);
    CHECK_THROWS_AS(derangements(21), Error);
}

TEST_CASE("fixed-point distribution") {
    const auto d4 = fixed_point_distribution(4);
    CHECK(d4.values == std::vector<Rational>{Rational(9, 24), Rational(8, 24), Rational(6, 24), Rational(0),
                                             Rational(1, 24)});
    for (unsigned n = 1; n <= 8; ++n) {
        const auto counts = oracle::fixed_point_counts(n);
        std::int64_t total = 0;
        for (auto c : counts) total += static_cast<std::int64_t>(c);
        const auto d = fixed_point_distribution(n);
        for (unsigned r = 0; r <= n; ++r) CHECK(d.values[r] == Rational(static_cast<std::int64_t>(counts[r]), total));
    }
    for (unsigned n = 1; n <= 12; ++n) {
        const auto d = fixed_point_distribution(n);
        Rational sum(0);
        std::int64_t fact = 1;
        for (unsigned r = 0; r <= n; ++r) {
            if (r > 0) fact *= r;
            CHECK(d.values[r] <= Rational(1, fact));
            sum += d.values[r];
        }
        CHECK(sum == Rational(1));
        CHECK(d.values[n - 1] == Rational(0));
        CHECK(d.values[n] == Rational(1, fact));
    }
}

TEST_CASE("coefficient distribution for fixed exponents") {
    // Quadratics over F_101: for each a the discriminant a^2 - 4b runs over
    // F \ {a^2}, i.e. zero once, 49 nonzero squares and 50 nonsquares.
    const auto d = ab_distribution(101, 2, 1);
    CHECK(d.denominator == 100 * 100);
    CHECK(d.numerators == std::vector<std::uint64_t>{5000, 100, 4900});
    Rational sum(0);
    for (std::size_t r = 0; r <= d.r_max(); ++r) sum += d.proportion(r);
    CHECK(sum == Rational(1));
    CHECK_THROWS_AS(ab_distribution(101, 4, 2), Error);
    CHECK_THROWS_AS(ab_distribution(101, 2, 1, 100.0), BudgetError);
}

TEST_CASE("trinomial distribution equals a full enumeration for p <= 31") {
    for (auto p : primes_in_range(5, 31)) {
        const auto d = trinomial_distribution(p);
        const auto counts = oracle::trinomial_root_counts(p);
        std::uint64_t total = 0;
        for (const auto& [r, c] : counts) total += c;
        CHECK(d.denominator == total);
        CHECK(d.denominator == count_Tp_direct(p));
        for (std::size_t r = 0; r <= d.r_max(); ++r) {
            const auto it = counts.find(r);
            CHECK(d.numerators[r] == (it == counts.end() ? 0 : it->second));
        }
        CHECK(d.r_max() <= half_plus_sqrt_floor(p - 1));
    }
    CHECK_THROWS_AS(trinomial_distribution(1013), BudgetError);
}

TEST_CASE("Poisson distance") {
    // A distribution equal to the rounded Poisson truncation leaves only the tail.
    Distribution d;
    d.p = 0;
    d.denominator = 1000000000000ull;
    double tail = 1.0;
    for (unsigned r = 0; r <= 6; ++r) {
        d.numerators.push_back(static_cast<std::uint64_t>(std::llround(poisson_pmf(r) * 1e12)));
        tail -= poisson_pmf(r);
    }
    CHECK(poisson_distance(d) == doctest::Approx(tail).epsilon(1e-9));
    CHECK(poisson_pmf(0) == doctest::Approx(std::exp(-1.0)));
    CHECK(poisson_pmf(3) == doctest::Approx(std::exp(-1.0) / 6));
}

TEST_CASE("ratio table") {
    RpRecord r;
    r.p = 101;
    r.R_p = 5;
    fill_predictor_columns(r);
    const auto one = ratio_table({r});
    CHECK(one.mean == r.ratio);
    CHECK(one.stddev == 0);

    RpRecord small;
    small.p = 7;
    small.R_p = 2;
    fill_predictor_columns(small);
    CHECK(std::isnan(small.ratio));
    const auto two = ratio_table({small, r});
    CHECK(two.rows.size() == 1);
    CHECK(two.excluded == 1);
    CHECK_THROWS_AS(ratio_table({}), Error);
}
