#pragma once

#include "ffroots/field.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

namespace ffroots {

/// Exponent pairs (n, s) with 0 < s < n < p-1 and gcd(n, s, p-1) = 1, grouped
/// under (n, s) -> sort(n e mod p-1, s e mod p-1) for units e mod p-1.
struct ExponentOrbit {
    std::uint64_t n = 0; // representative: lexicographically smallest member
    std::uint64_t s = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> members; // sorted

    std::uint64_t size() const noexcept { return members.size(); }
};

/// Complete disjoint cover of the valid pairs, ordered by representative.
std::vector<ExponentOrbit> exponent_orbits(std::uint64_t p);

/// Number of valid exponent pairs, by direct enumeration.
std::uint64_t count_exponent_pairs(std::uint64_t p);

/// counts[r] = number of coefficient pairs (a, b) in (F_p^*)^2 whose trinomial
/// has exactly r roots.
struct RootHistogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    /// Incidences (x, a) whose constant term would be b = 0; they belong to no
    /// pair in the histogram.
    std::uint64_t zero_b_incidences = 0;

    /// sum_r r * counts[r]
    std::uint64_t root_mass() const noexcept;
    void add(const RootHistogram& other, std::uint64_t weight = 1);
    bool operator==(const RootHistogram&) const = default;
};

struct ExponentSweep {
    std::uint64_t max_roots = 0;
    std::uint64_t a = 0; // witness, smallest (a, b) attaining max_roots
    std::uint64_t b = 0;
    RootHistogram histogram;
};

/// Incidence sweep over all (a, b) in (F_p^*)^2 for fixed exponents: for each
/// a, every x in F_p^* votes for b = -(x^n + a x^s). O(p^2) time, O(p) memory.
/// `field` must be a prime field with log tables.
ExponentSweep max_roots_for_exponents(const Field& field, std::uint64_t n, std::uint64_t s);
ExponentSweep max_roots_for_exponents(std::uint64_t p, std::uint64_t n, std::uint64_t s);

struct RpRecord {
    std::uint64_t p = 0;
    std::uint64_t R_p = 0;
    std::uint64_t n = 0, s = 0, a = 0, b = 0; // witness
    double two_ln_p = 0;
    double two_log2_p = 0;
    /// Predictor columns; NaN below p = 11 where the effective count is not
    /// defined.
    double N_p = 0;
    double E_Np = 0;
    double ratio = 0;
    double elapsed_seconds = 0;

    /// Equality on everything except elapsed time.
    bool same_result(const RpRecord& other) const noexcept;
};

/// All orbit sweeps of one prime, in representative order.
struct PrimeSweep {
    std::uint64_t p = 0;
    std::vector<ExponentOrbit> orbits;
    std::vector<ExponentSweep> sweeps;
};

PrimeSweep sweep_prime(std::uint64_t p, unsigned workers);

/// Reduce a prime sweep to its record (max over orbits, ties broken by the
/// smallest (n, s, a, b)).
RpRecord record_from_sweep(const PrimeSweep& sweep);

/// Fills the logarithm and predictor columns of a record.
void fill_predictor_columns(RpRecord& record);

inline constexpr double kDefaultBudget = 2e11;

struct ScanConfig {
    std::uint64_t p_min = 5;
    std::uint64_t p_max = 100;
    unsigned workers = 1;
    double budget = kDefaultBudget;
    /// Resume from / write progress to this file after each prime.
    std::optional<std::filesystem::path> checkpoint;
    /// Stop after this many primes in this invocation (chunked runs).
    std::optional<std::uint64_t> max_primes;
};

/// Estimated elementary operations for a scan: sum over primes of
/// (#pairs / phi(p-1)) * p^2.
double estimate_scan_cost(std::uint64_t p_min, std::uint64_t p_max);

struct ScanResult {
    std::vector<RpRecord> records;
    bool complete = false; // false when max_primes stopped the run early
};

/// R_p for every prime in [p_min, p_max]. Throws BudgetError before doing
/// any work when the estimate exceeds the budget. Output does not depend on
/// the worker count.
ScanResult scan(const ScanConfig& config);

/// Reference R_p: every (n, s, a, b) in T_p with per-element evaluation by
/// plain modular exponentiation. No orbits, no log tables. p <= 100.
RpRecord brute_force_Rp(std::uint64_t p);

} // namespace ffroots
