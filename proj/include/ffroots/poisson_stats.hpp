#pragma once

#include "ffroots/rp_search.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <vector>

namespace ffroots {

using Rational = boost::rational<std::int64_t>;

/// (1/2)(p-1)^2 (J_2(p-1) - phi(p-1)): counts exponent pairs from {1..p-1}.
std::uint64_t count_Tp_formula(std::uint64_t p);

/// #T_p under 0 < s < n < p-1 by enumerating exponent pairs.
std::uint64_t count_Tp_direct(std::uint64_t p);

/// N(p) = ((p-1)/2) (J_2(p-1)/phi(p-1) - 1), exact. Defined for primes p >= 5.
Rational effective_N(std::uint64_t p);

/// Principal branch W(x) for x >= 0 by Halley iteration from log(1 + x).
double lambert_w(double x);

/// E_N = L/W(L/e) - (1 + log 2pi) / (2 log(L/W(L/e))) - 1.5 with L = log N.
/// Requires N > e^e.
double predictor_E(double N);

/// log N / log log N; requires N > e.
double simple_predictor(double N);

/// Derangement count by the recurrence d_n = n d_{n-1} + (-1)^n. n <= 20.
std::uint64_t derangements(unsigned n);

/// Derangement count as the nearest integer to n!/e, evaluated in exact
/// integer arithmetic against a 30-term rational approximation of 1/e.
/// d_0 = 1 by convention (the nearest-integer form only holds for n >= 1).
std::uint64_t derangements_nearest(unsigned n);

/// Fraction of permutations of n points with exactly r fixed points, r = 0..n.
struct FixedPointDist {
    unsigned n = 0;
    std::vector<Rational> values;
};

FixedPointDist fixed_point_distribution(unsigned n);

/// Exact root-count proportions: numerators[r] / denominator for r = 0..r_max.
struct Distribution {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> numerators;
    std::uint64_t denominator = 0;

    std::size_t r_max() const noexcept { return numerators.empty() ? 0 : numerators.size() - 1; }
    Rational proportion(std::size_t r) const;
    double value(std::size_t r) const;
};

/// Proportions of (a, b) in (F_p^*)^2 for which x^n + a x^s + b has r roots.
Distribution ab_distribution(std::uint64_t p, std::uint64_t n, std::uint64_t s, double budget = kDefaultBudget);

/// Root-count distribution over all of T_p, from orbit histograms weighted by
/// orbit size. p <= 1009 unless long_run is set.
Distribution trinomial_distribution(std::uint64_t p, unsigned workers = 1, bool long_run = false,
                                    double budget = kDefaultBudget);
Distribution distribution_from_sweep(const PrimeSweep& sweep);

/// e^{-1} / r!
double poisson_pmf(unsigned r);

/// sum_{r >= 0} |t(r) - e^{-1}/r!|, with the part beyond r_max added in closed
/// form as 1 - e^{-1} sum_{r <= r_max} 1/r!.
double poisson_distance(const Distribution& d);

struct PredictorValues {
    std::uint64_t p = 0;
    std::uint64_t J2 = 0;
    std::uint64_t phi = 0;
    std::uint64_t Tp_formula = 0;
    Rational N{0};
    double E_N = 0;
    double simple = 0;
};

PredictorValues predictor_values(std::uint64_t p);

struct RatioSummary {
    std::vector<RpRecord> rows; // records with a defined ratio
    std::size_t excluded = 0;   // records without one (p < 11)
    double mean = 0;
    double stddev = 0; // population standard deviation
};

RatioSummary ratio_table(const std::vector<RpRecord>& records);

} // namespace ffroots
