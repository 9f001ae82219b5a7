// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance [--long-run] [criterion ...]
//
// With no criterion numbers every criterion runs. --long-run adds the
// optional p = 10007 distance row and the multi-hour R_8581 search.

#include "ffroots/error.hpp"
#include "ffroots/number_theory.hpp"
#include "ffroots/poisson_stats.hpp"
#include "ffroots/report_io.hpp"
#include "ffroots/rp_search.hpp"
#include "ffroots/trinomial.hpp"

#include "oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace ffroots;

namespace {

constexpr double kDistanceTolerance = 1e-6;
constexpr double kLambertResidual = 1e-10;
constexpr double kLambertAtE = 1e-12;
constexpr double kFixedPointConstant = 5.0; // deviation allowed: 5 / sqrt(p)
constexpr int kFuzzCases = 10000;
constexpr double kExtremalSeconds = 10;
constexpr double kFuzzSeconds = 60;
constexpr double kOracleSeconds = 300;
constexpr double kFixedPointSeconds = 60;

struct Outcome {
    bool pass = false;
    std::string detail;
};

bool long_run = false;

unsigned hardware_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string fmt(double v, const char* spec = "%.7f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

Outcome extremal() {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out{true, ""};
    for (auto [p, k] : {std::pair{3ull, 1u}, {5ull, 1u}, {7ull, 1u}, {11ull, 1u}, {3ull, 2u}, {5ull, 2u}}) {
        std::uint64_t r = 0, expected = 1;
        for (unsigned i = 0; i < k; ++i) expected *= p;
        try {
            const auto res = extremal_trinomial(p, k);
            r = res.report.count();
        } catch (const Error& e) {
            out.detail += "(" + std::to_string(p) + "," + std::to_string(k) + ") threw " + e.what() + "; ";
        }
        out.pass = out.pass && r == expected;
        out.detail += "(" + std::to_string(p) + "," + std::to_string(k) + ") r=" + std::to_string(r) + "/" +
                      std::to_string(expected) + " ";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.pass = out.pass && secs < kExtremalSeconds;
    out.detail += "in " + fmt(secs, "%.2f") + " s";
    return out;
}

Outcome cube() {
    Outcome out{true, ""};
    for (auto [p, m] : {std::pair{3ull, 1u}, {5ull, 1u}, {3ull, 2u}}) {
        const auto res = cube_example(p, m);
        out.pass = out.pass && res.matches && res.report.count() == res.expected_roots;
        out.detail += "q=" + std::to_string(res.trinomial.field->q()) + " r=" + std::to_string(res.report.count()) +
                      "/" + std::to_string(res.expected_roots) + " ";
    }
    return out;
}

Outcome bound_fuzz() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<FieldPtr> fields;
    for (auto p : primes_in_range(3, 500)) fields.push_back(make_prime_field(p));
    for (auto [p, k] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 3u}, {7u, 2u}, {3u, 4u}, {11u, 2u}}) {
        fields.push_back(make_extension_field(p, k));
    }
    std::mt19937_64 rng(2026);
    int root_violations = 0, coset_violations = 0, delta_gt_one = 0;
    for (int t = 0; t < kFuzzCases; ++t) {
        const auto& F = fields[rng() % fields.size()];
        const std::uint64_t q = F->q();
        std::uint64_t n = 2 + rng() % (2 * q);
        std::uint64_t s = 1 + rng() % (n - 1);
        if (rng() % 3 == 0) {
            const auto divs = prime_divisors(q - 1);
            const std::uint64_t d = divs[rng() % divs.size()];
            n = d * (2 + rng() % 20);
            s = d * (1 + rng() % (n / d - 1));
        }
        const auto a = F->from_index(1 + rng() % (q - 1));
        const auto b = F->from_index(1 + rng() % (q - 1));
        const auto f = Trinomial::monic(F, n, s, a, b);
        const auto rep = count_roots(f);
        const auto bound = bounds(f);
        delta_gt_one += rep.delta > 1;
        root_violations += rep.count() > bound.new_bound;
        coset_violations += rep.cosets.size() > half_plus_sqrt_floor((q - 1) / rep.delta);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {root_violations == 0 && coset_violations == 0 && secs < kFuzzSeconds,
            std::to_string(kFuzzCases) + " trinomials (" + std::to_string(delta_gt_one) +
                " with delta>1): root-bound violations " + std::to_string(root_violations) +
                ", coset-bound violations " + std::to_string(coset_violations) + ", " + fmt(secs, "%.2f") + " s"};
}

Outcome poisson_distances() {
    struct Row {
        std::uint64_t p;
        double reference;
    };
    std::vector<Row> rows{{101, 0.0367266}, {1009, 0.0112061}};
    if (long_run) rows.push_back({10007, 0.0007107});
    Outcome out{true, ""};
    std::vector<double> got;
    for (const auto& row : rows) {
        const auto t0 = std::chrono::steady_clock::now();
        const double d =
            poisson_distance(trinomial_distribution(row.p, hardware_workers(), long_run, long_run ? 1e14 : kDefaultBudget));
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = std::abs(d - row.reference) <= kDistanceTolerance;
        out.pass = out.pass && ok;
        got.push_back(d);
        out.detail += "p=" + std::to_string(row.p) + " distance=" + fmt(d) + " reference=" + fmt(row.reference) +
                      (ok ? " ok" : " off by " + fmt(std::abs(d - row.reference))) + " (" + fmt(secs, "%.1f") + " s); ";
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < got.size(); ++i) decreasing = decreasing && got[i] < got[i - 1];
    out.detail += decreasing ? "trend decreasing" : "trend NOT decreasing";
    if (!long_run) out.detail += "; p=10007 skipped (needs --long-run)";
    return out;
}

Outcome oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    ScanConfig config;
    config.p_min = 5;
    config.p_max = 47;
    config.workers = hardware_workers();
    const auto records = scan(config).records;
    int mismatches = 0;
    for (const auto& r : records) {
        const auto brute = brute_force_Rp(r.p);
        const auto direct = oracle::prime_roots(r.p, r.n, r.s, r.a, r.b).size();
        if (!r.same_result(brute) || direct != r.R_p) ++mismatches;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {mismatches == 0 && !records.empty() && secs < kOracleSeconds,
            std::to_string(records.size()) + " primes, " + std::to_string(mismatches) + " mismatches, " +
                fmt(secs, "%.2f") + " s"};
}

std::vector<RpRecord> scan_1000_records;

Outcome empirical_bound() {
    const auto t0 = std::chrono::steady_clock::now();
    ScanConfig config;
    config.p_min = 5;
    config.p_max = 1000;
    config.workers = hardware_workers();
    scan_1000_records = scan(config).records;
    int violations = 0;
    double worst = 0;
    std::uint64_t worst_p = 0;
    for (const auto& r : scan_1000_records) {
        const double ratio = static_cast<double>(r.R_p) / r.two_ln_p;
        if (ratio > worst) worst = ratio, worst_p = r.p;
        if (static_cast<double>(r.R_p) > r.two_ln_p) {
            ++violations;
            std::cout << "    VIOLATION p=" << r.p << " R_p=" << r.R_p << " 2 ln p=" << fmt(r.two_ln_p, "%.6f") << "\n";
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {violations == 0 && scan_1000_records.size() == 166,
            std::to_string(scan_1000_records.size()) + " primes, " + std::to_string(violations) +
                " violations, max R_p/(2 ln p)=" + fmt(worst, "%.4f") + " at p=" + std::to_string(worst_p) + ", " +
                fmt(secs, "%.1f") + " s with " + std::to_string(config.workers) + " workers"};
}

Outcome fixed_points_exact() {
    bool ok = true;
    for (unsigned n = 1; n <= 8; ++n) {
        const auto counts = oracle::fixed_point_counts(n);
        std::int64_t total = 0;
        for (auto c : counts) total += static_cast<std::int64_t>(c);
        const auto d = fixed_point_distribution(n);
        for (unsigned r = 0; r <= n; ++r) ok = ok && d.values[r] == Rational(static_cast<std::int64_t>(counts[r]), total);
    }
    bool bound = true;
    for (unsigned n = 1; n <= 12; ++n) {
        const auto d = fixed_point_distribution(n);
        std::int64_t fact = 1;
        for (unsigned r = 0; r <= n; ++r) {
            if (r > 0) fact *= r;
            bound = bound && d.values[r] <= Rational(1, fact);
        }
    }
    return {ok && bound, std::string("S_n enumeration n<=8 ") + (ok ? "exact" : "MISMATCH") + ", rho(r)<=1/r! n<=12 " +
                             (bound ? "holds" : "FAILS")};
}

Outcome fixed_points_empirical() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t p = 997;
    const auto d = ab_distribution(p, 5, 2);
    const auto theory = fixed_point_distribution(5);
    const double tol = kFixedPointConstant / std::sqrt(static_cast<double>(p));
    double worst = 0;
    std::string devs;
    for (unsigned r = 0; r <= 5; ++r) {
        const double dev = std::abs(d.value(r) - boost::rational_cast<double>(theory.values[r]));
        worst = std::max(worst, dev);
        devs += fmt(dev, "%.4f") + (r < 5 ? "," : "");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {worst <= tol && d.r_max() <= 5 && secs < kFixedPointSeconds,
            "deviations r=0..5 [" + devs + "], max " + fmt(worst, "%.4f") + " <= " + fmt(tol, "%.4f") + ", " +
                fmt(secs, "%.2f") + " s"};
}

Outcome predictor() {
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const double x = 100.0 * i / 999.0;
        const double w = lambert_w(x);
        worst = std::max(worst, std::abs(w * std::exp(w) - x) / std::max(1.0, x));
    }
    const double at_e = std::abs(lambert_w(std::exp(1.0)) - 1.0);
    std::size_t primes = 0, outside = 0;
    for (auto p : primes_in_range(11, 100000)) {
        ++primes;
        const Rational r = effective_N(p) / Rational(static_cast<std::int64_t>(p * p));
        if (!(r > Rational(1, 2) && r < Rational(2))) ++outside;
    }
    return {worst <= kLambertResidual && at_e <= kLambertAtE && outside == 0,
            "max scaled residual " + fmt(worst, "%.2e") + ", |W(e)-1|=" + fmt(at_e, "%.2e") + ", N(p)/p^2 outside (1/2,2) for " +
                std::to_string(outside) + " of " + std::to_string(primes) + " primes"};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    const auto dir = std::filesystem::temp_directory_path() / "ffroots_acceptance";
    std::filesystem::create_directories(dir);
    const auto one = dir / "workers1.csv", eight = dir / "workers8.csv";
    std::filesystem::remove(one);
    std::filesystem::remove(eight);
    const std::string cli = FFROOTS_CLI;
    const int a = std::system((cli + " rp-scan --p-max 200 --workers 1 --out " + one.string() + " 2>/dev/null").c_str());
    const int b = std::system((cli + " rp-scan --p-max 200 --workers 8 --out " + eight.string() + " 2>/dev/null").c_str());
    const std::string ca = read_file(one), cb = read_file(eight);
    const bool same = a == 0 && b == 0 && !ca.empty() && ca == cb;
    return {same, std::to_string(ca.size()) + " vs " + std::to_string(cb.size()) + " bytes, " +
                      (same ? "byte-identical" : "DIFFERENT")};
}

Outcome out_of_scope() {
    // What can be checked at desk scale: the predictor side of the R_p = 16 claim.
    std::string detail;
    bool ok = true;
    for (std::uint64_t p : {8581ull, 43943ull, 107351ull, 133877ull}) {
        const auto v = predictor_values(p);
        const double ratio = 16.0 / v.E_N;
        ok = ok && ratio > 1.0;
        detail += "16/E_N(" + std::to_string(p) + ")=" + fmt(ratio, "%.4f") + " ";
    }
    if (long_run) {
        ScanConfig config;
        config.p_min = config.p_max = 8581;
        config.workers = hardware_workers();
        config.budget = 1e14;
        const auto r = scan(config).records.at(0);
        ok = ok && r.R_p == 16;
        detail += "; R_8581=" + std::to_string(r.R_p) + " (reference 16)";
    } else {
        detail += "; R_8581 not computed (multi-hour, needs --long-run)";
    }
    if (!scan_1000_records.empty()) {
        const auto s = ratio_table(scan_1000_records);
        detail += "; desk-range ratios p<=1000: mean " + fmt(s.mean, "%.4f") + " stddev " + fmt(s.stddev, "%.4f");
    }
    detail += "; full-range mean/stddev over p<=139571 and R_p at 43943, 107351, 133877 are cluster scale, not run";
    return {ok, detail};
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--long-run") {
            long_run = true;
        } else {
            selected.insert(std::stoi(arg));
        }
    }
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"extremal trinomials have exactly p^k roots", extremal},
        {"cube example has q^(1/3)+1 roots", cube},
        {"root and coset bounds never violated", bound_fuzz},
        {"Poisson distances match the reference values", poisson_distances},
        {"scan equals brute force for p <= 47", oracle_equivalence},
        {"R_p <= 2 ln p for p <= 1000", empirical_bound},
        {"fixed-point distribution exact", fixed_points_exact},
        {"coefficient distribution near fixed-point law", fixed_points_empirical},
        {"predictor pipeline", predictor},
        {"1 vs 8 workers byte-identical", determinism},
        {"cluster-scale claims scoped explicitly", out_of_scope},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (!selected.empty() && !selected.count(id)) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[i].first << " - "
                  << o.detail << std::endl;
    }
    std::cout << (failures == 0 ? "all selected criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
