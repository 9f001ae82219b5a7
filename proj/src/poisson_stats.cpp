#include "ffroots/poisson_stats.hpp"

#include "ffroots/error.hpp"
#include "ffroots/number_theory.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace ffroots {
namespace {

std::int64_t factorial(unsigned n) {
    std::int64_t f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

std::uint64_t count_Tp_formula(std::uint64_t p) {
    require(p >= 5 && is_prime(p), ErrorCode::NotPrime, "need a prime p >= 5");
    const std::uint64_t m = p - 1;
    return m * m * (jordan_totient_2(m) - euler_phi(m)) / 2;
}

std::uint64_t count_Tp_direct(std::uint64_t p) {
    require(p >= 5 && is_prime(p), ErrorCode::NotPrime, "need a prime p >= 5");
    return count_exponent_pairs(p) * (p - 1) * (p - 1);
}

Rational effective_N(std::uint64_t p) {
    require(p >= 5 && is_prime(p), ErrorCode::NotPrime, "need a prime p >= 5");
    const auto m = static_cast<std::int64_t>(p - 1);
    const auto j2 = static_cast<std::int64_t>(jordan_totient_2(p - 1));
    const auto phi = static_cast<std::int64_t>(euler_phi(p - 1));
    return Rational(m, 2) * (Rational(j2, phi) - 1);
}

double lambert_w(double x) {
    require(x >= 0 && std::isfinite(x), ErrorCode::DomainError, "lambert_w needs a finite x >= 0");
    if (x == 0) return 0;
    double w = std::log1p(x);
    for (int iter = 0; iter < 100; ++iter) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double step = f / (ew * (w + 1) - (w + 2) * f / (2 * w + 2));
        const double next = w - step;
        if (std::abs(next - w) <= 1e-12 * (1 + std::abs(next))) return next;
        w = next;
    }
    fail(ErrorCode::NonConvergence, "lambert_w did not converge for x = " + std::to_string(x));
}

double predictor_E(double N) {
    require(N > std::exp(std::numbers::e), ErrorCode::DomainError, "predictor_E needs N > e^e");
    const double L = std::log(N);
    const double A = L / lambert_w(L / std::numbers::e);
    return A - (1 + std::log(2 * std::numbers::pi)) / (2 * std::log(A)) - 1.5;
}

double simple_predictor(double N) {
    require(N > std::numbers::e, ErrorCode::DomainError, "simple predictor needs N > e");
    return std::log(N) / std::log(std::log(N));
}

std::uint64_t derangements(unsigned n) {
    require(n <= 20, ErrorCode::Overflow, "derangement counts overflow 64 bits beyond n = 20");
    std::int64_t d = 1; // d_0
    for (unsigned i = 1; i <= n; ++i) d = static_cast<std::int64_t>(i) * d + (i % 2 == 0 ? 1 : -1);
    return static_cast<std::uint64_t>(d);
}

std::uint64_t derangements_nearest(unsigned n) {
    require(n <= 20, ErrorCode::Overflow, "derangement counts overflow 64 bits beyond n = 20");
    if (n == 0) return 1;
    // 1/e ~ A / 30! with A = sum_{k<=30} (-1)^k 30!/k!, error below 1/31!.
    // Then n!/e ~ A / D with D = 30!/n!.
    constexpr unsigned K = 30;
    __int128 A = 0;
    __int128 tail = 1; // 30!/k!, for k running down from 30
    for (unsigned k = K + 1; k-- > 0;) {
        A += (k % 2 == 0) ? tail : -tail;
        tail *= k == 0 ? 1 : k;
    }
    __int128 D = 1;
    for (unsigned i = n + 1; i <= K; ++i) D *= i;
    const __int128 whole = A / D;
    const __int128 rem = A % D;
    // n!/e is never within 1/10 of a half-integer for n >= 1.
    const __int128 gap = 2 * rem - D;
    require((gap < 0 ? -gap : gap) * 10 >= D, ErrorCode::InvariantViolation, "n!/e too close to a half-integer");
    return static_cast<std::uint64_t>(2 * rem >= D ? whole + 1 : whole);
}

FixedPointDist fixed_point_distribution(unsigned n) {
    require(n >= 1 && n <= 20, ErrorCode::PreconditionViolated, "fixed-point distribution needs 1 <= n <= 20");
    FixedPointDist out;
    out.n = n;
    for (unsigned r = 0; r <= n; ++r) {
        if (r == n) {
            out.values.emplace_back(1, factorial(r));
        } else {
            const auto nearest = static_cast<std::int64_t>(derangements_nearest(n - r));
            out.values.push_back(Rational(nearest, factorial(r)) / factorial(n - r));
        }
    }
    return out;
}

Rational Distribution::proportion(std::size_t r) const {
    if (r >= numerators.size()) return Rational(0);
    return Rational(static_cast<std::int64_t>(numerators[r]), static_cast<std::int64_t>(denominator));
}

double Distribution::value(std::size_t r) const {
    if (r >= numerators.size()) return 0.0;
    return static_cast<double>(static_cast<long double>(numerators[r]) / static_cast<long double>(denominator));
}

namespace {

Distribution from_histogram(std::uint64_t p, const RootHistogram& h) {
    Distribution d;
    d.p = p;
    d.numerators = h.counts;
    while (d.numerators.size() > 1 && d.numerators.back() == 0) d.numerators.pop_back();
    d.denominator = h.total;
    std::uint64_t sum = 0;
    for (auto c : d.numerators) sum += c;
    require(sum == d.denominator, ErrorCode::InvariantViolation, "distribution does not sum to one");
    return d;
}

} // namespace

Distribution ab_distribution(std::uint64_t p, std::uint64_t n, std::uint64_t s, double budget) {
    require(0 < s && s < n, ErrorCode::InvalidExponent, "exponents must satisfy 0 < s < n");
    require(std::gcd(n, s) == 1, ErrorCode::PreconditionViolated, "gcd(n, s) must be 1");
    require(p >= 3 && is_prime(p), ErrorCode::NotPrime, "need an odd prime");
    const double cost = static_cast<double>(p) * static_cast<double>(p);
    if (cost > budget) throw BudgetError(cost, budget, "ab_distribution at p = " + std::to_string(p) + " exceeds budget");
    return from_histogram(p, max_roots_for_exponents(p, n, s).histogram);
}

Distribution distribution_from_sweep(const PrimeSweep& sweep) {
    RootHistogram total;
    for (std::size_t i = 0; i < sweep.orbits.size(); ++i) total.add(sweep.sweeps[i].histogram, sweep.orbits[i].size());
    const std::uint64_t m = sweep.p - 1;
    require(total.total == count_exponent_pairs(sweep.p) * m * m, ErrorCode::InvariantViolation,
            "orbit-weighted histogram does not cover T_p");
    return from_histogram(sweep.p, total);
}

Distribution trinomial_distribution(std::uint64_t p, unsigned workers, bool long_run, double budget) {
    require(p >= 5 && is_prime(p), ErrorCode::NotPrime, "need a prime p >= 5");
    if (p > 1009 && !long_run) {
        throw BudgetError(estimate_scan_cost(p, p), budget,
                          "trinomial_distribution beyond p = 1009 needs the long-run flag");
    }
    const double cost = estimate_scan_cost(p, p);
    if (cost > budget) {
        throw BudgetError(cost, budget, "trinomial_distribution at p = " + std::to_string(p) + " exceeds budget");
    }
    return distribution_from_sweep(sweep_prime(p, workers));
}

double poisson_pmf(unsigned r) {
    return std::exp(-1.0 - std::lgamma(static_cast<double>(r) + 1.0));
}

double poisson_distance(const Distribution& d) {
    long double distance = 0;
    long double inv_fact = 1; // 1/r!
    long double partial = 0;  // sum_{r <= r_max} 1/r!
    const long double inv_e = std::exp(-1.0L);
    for (std::size_t r = 0; r <= d.r_max(); ++r) {
        if (r > 0) inv_fact /= static_cast<long double>(r);
        partial += inv_fact;
        const long double t = static_cast<long double>(d.numerators[r]) / static_cast<long double>(d.denominator);
        distance += std::abs(t - inv_e * inv_fact);
    }
    distance += 1 - inv_e * partial;
    return static_cast<double>(distance);
}

PredictorValues predictor_values(std::uint64_t p) {
    PredictorValues v;
    v.p = p;
    v.J2 = jordan_totient_2(p - 1);
    v.phi = euler_phi(p - 1);
    v.Tp_formula = count_Tp_formula(p);
    v.N = effective_N(p);
    const double N = boost::rational_cast<double>(v.N);
    v.E_N = predictor_E(N);
    v.simple = simple_predictor(N);
    return v;
}

RatioSummary ratio_table(const std::vector<RpRecord>& records) {
    require(!records.empty(), ErrorCode::PreconditionViolated, "ratio table needs at least one record");
    RatioSummary out;
    for (const auto& r : records) {
        if (std::isfinite(r.ratio)) {
            out.rows.push_back(r);
        } else {
            ++out.excluded;
        }
    }
    if (out.rows.empty()) return out;
    double sum = 0;
    for (const auto& r : out.rows) sum += r.ratio;
    out.mean = sum / static_cast<double>(out.rows.size());
    double sq = 0;
    for (const auto& r : out.rows) sq += (r.ratio - out.mean) * (r.ratio - out.mean);
    out.stddev = std::sqrt(sq / static_cast<double>(out.rows.size()));
    return out;
}

} // namespace ffroots
