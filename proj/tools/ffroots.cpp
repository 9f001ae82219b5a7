#include "ffroots/error.hpp"
#include "ffroots/field.hpp"
#include "ffroots/kernels.hpp"
#include "ffroots/number_theory.hpp"
#include "ffroots/poisson_stats.hpp"
#include "ffroots/report_io.hpp"
#include "ffroots/rp_search.hpp"
#include "ffroots/trinomial.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace ffroots;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kBudget = 3, kInternal = 4 };

struct Options {
    std::uint64_t p = 0;
    unsigned k = 1;
    std::uint64_t seed = Field::kDefaultSeed;
    std::uint64_t n = 0, s = 0;
    std::string a = "1", b = "1";
    std::uint64_t q = 0, delta = 1, subgroup = 0;
    unsigned m = 1;
    std::string kind = "frobenius";

    std::uint64_t p_min = 5, p_max = 100;
    unsigned workers = 1;
    double budget = kDefaultBudget;
    std::optional<std::uint64_t> max_primes;
    std::string checkpoint;
    std::vector<std::uint64_t> primes;
    std::optional<std::uint64_t> rp;
    unsigned perm_n = 4;
    std::string from;
    bool long_run = false;

    std::string out;
    std::string format; // empty: the subcommand's default
};

/// Writes to --out when given, stdout otherwise.
void emit(const Options& o, const std::string& content) {
    if (o.out.empty()) {
        std::cout << content;
    } else {
        write_file_atomic(o.out, content);
    }
}

std::string fraction(const Rational& r) { return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()); }

std::string describe(const Trinomial& f) {
    const Field& F = *f.field;
    auto coeff = [&](const Element& c) { return F.k() == 1 ? F.to_string(c) : "(" + F.to_string(c) + ")"; };
    return coeff(f.lead) + "*x^" + std::to_string(f.n) + " + " + coeff(f.a) + "*x^" + std::to_string(f.s) + " + " +
           coeff(f.b);
}

std::string field_line(const Field& F) {
    std::string line = "field: F_" + std::to_string(F.q()) + " (p=" + std::to_string(F.p()) +
                       ", k=" + std::to_string(F.k()) + ")";
    if (F.k() > 1) {
        const auto j = field_json(F);
        line += " modulus " + j.at("modulus").get<std::string>() + " seed " + std::to_string(*F.seed());
    }
    return line + "\n";
}

std::string root_report_text(const Trinomial& f, const RootReport& report) {
    const Field& F = *f.field;
    const DeltaBound bound = delta_bound(F.q(), report.delta);
    std::string out = field_line(F);
    out += "trinomial: " + describe(f) + "\n";
    out += "delta: " + std::to_string(report.delta) + "\n";
    out += "r: " + std::to_string(report.count()) + "\n";
    out += "roots:";
    for (const auto& x : report.roots) out += " [" + F.to_string(x) + "]";
    out += "\ncosets: " + std::to_string(report.cosets.size()) + "\n";
    out += "new_bound: " + std::to_string(bound.new_bound) + "\n";
    out += "old_bound: " + std::to_string(bound.old_bound) + "\n";
    return out;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (o.format == f) return;
    }
    fail(ErrorCode::PreconditionViolated, "--format " + o.format + " is not supported by this subcommand");
}

int cmd_count_roots(const Options& o) {
    require_format(o, {"text", "json"});
    const auto field = make_field(o.p, o.k, o.seed);
    const Element a = field->parse(o.a);
    const Element b = field->parse(o.b);
    const auto f = Trinomial::monic(field, o.n, o.s, a, b);
    const auto report = count_roots(f);
    emit(o, o.format == "json" ? root_report_json(f, report).dump(2) + "\n" : root_report_text(f, report));
    return kOk;
}

int cmd_bounds(const Options& o) {
    require_format(o, {"text", "json"});
    std::uint64_t q = o.q, d = o.delta;
    if (q == 0) {
        // Derive q and delta from a field and exponent pair.
        const auto field = make_field(o.p, o.k, o.seed);
        require(0 < o.s && o.s < o.n, ErrorCode::InvalidExponent, "exponents must satisfy 0 < s < n");
        q = field->q();
        d = gcd3(o.n, o.s, q - 1);
    }
    require(q >= 2, ErrorCode::PreconditionViolated, "q must be at least 2");
    require(d >= 1 && (q - 1) % d == 0, ErrorCode::NotDivisor, "delta must divide q-1");
    const auto bound = delta_bound(q, d);
    if (o.format == "json") {
        emit(o, json{{"q", q}, {"delta", d}, {"new_bound", bound.new_bound}, {"old_bound", bound.old_bound}}.dump(2) +
                    "\n");
    } else {
        emit(o, "q: " + std::to_string(q) + "\ndelta: " + std::to_string(d) + "\nnew_bound: " +
                    std::to_string(bound.new_bound) + "\nold_bound: " + std::to_string(bound.old_bound) + "\n");
    }
    return kOk;
}

int cmd_extremal(const Options& o) {
    require_format(o, {"text", "json"});
    Trinomial f;
    RootReport report;
    std::uint64_t expected = 0;
    bool matches = true;
    std::optional<KernelDimension> kernel;
    if (o.kind == "frobenius") {
        auto res = extremal_trinomial(o.p, o.k, o.seed);
        kernel = frobenius_map_rank(o.p, o.k, o.seed);
        f = std::move(res.trinomial);
        report = std::move(res.report);
        expected = res.expected_roots;
    } else {
        auto res = cube_example(o.p, o.m, o.seed);
        f = std::move(res.trinomial);
        report = std::move(res.report);
        expected = res.expected_roots;
        matches = res.matches;
    }
    if (o.format == "json") {
        json j = root_report_json(f, report);
        j["kind"] = o.kind;
        j["expected_roots"] = expected;
        j["matches"] = matches;
        if (kernel) j["kernel"] = {{"size", kernel->kernel_size}, {"dimension", kernel->dimension}};
        emit(o, j.dump(2) + "\n");
    } else {
        std::string text = root_report_text(f, report);
        text += "expected_roots: " + std::to_string(expected) + "\n";
        if (kernel) {
            text += "kernel_size: " + std::to_string(kernel->kernel_size) +
                    "\nkernel_dimension: " + std::to_string(kernel->dimension) + "\n";
        }
        text += std::string("status: ") + (matches ? "MATCH" : "MISMATCH") + "\n";
        emit(o, text);
    }
    return kOk;
}

int cmd_family_check(const Options& o) {
    require_format(o, {"text", "json"});
    const auto field = make_field(o.p, o.k, o.seed);
    const std::uint64_t N = o.subgroup == 0 ? field->group_order() : o.subgroup;
    const auto rep = shared_root_check(field, o.n, o.s, N);
    if (o.format == "json") {
        json shared = json::array();
        for (const auto& x : rep.shared_roots) shared.push_back(x.coeffs);
        emit(o, json{{"field", field_json(*field)},
                     {"n", o.n},
                     {"s", o.s},
                     {"subgroup_order", rep.subgroup_order},
                     {"family_size", rep.family_size},
                     {"shared_roots", shared},
                     {"pass", rep.pass}}
                        .dump(2) +
                    "\n");
    } else {
        std::string text = field_line(*field);
        text += "subgroup_order: " + std::to_string(rep.subgroup_order) + "\n";
        text += "family_size: " + std::to_string(rep.family_size) + "\n";
        text += "shared_roots:";
        for (const auto& x : rep.shared_roots) text += " [" + field->to_string(x) + "]";
        text += std::string("\nstatus: ") + (rep.pass ? "PASS" : "FAIL") + "\n";
        emit(o, text);
    }
    return rep.pass ? kOk : kInternal;
}

int cmd_orbits(const Options& o) {
    require_format(o, {"text", "csv", "json"});
    const auto orbits = exponent_orbits(o.p);
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& orb : orbits) arr.push_back({{"n", orb.n}, {"s", orb.s}, {"members", orb.members}});
        emit(o, json{{"p", o.p}, {"pairs", count_exponent_pairs(o.p)}, {"orbits", arr}}.dump(2) + "\n");
        return kOk;
    }
    std::string text = "n,s,size,members\n";
    for (const auto& orb : orbits) {
        text += std::to_string(orb.n) + ',' + std::to_string(orb.s) + ',' + std::to_string(orb.size()) + ',';
        for (std::size_t i = 0; i < orb.members.size(); ++i) {
            if (i) text += ' ';
            text += std::to_string(orb.members[i].first) + ':' + std::to_string(orb.members[i].second);
        }
        text += '\n';
    }
    emit(o, text);
    return kOk;
}

/// rp_scan.csv alongside rp_scan.json.
void write_scan_outputs(const Options& o, const std::vector<RpRecord>& records) {
    const std::string csv = rp_scan_csv(records);
    if (o.out.empty()) {
        std::cout << (o.format == "json" ? rp_records_json(records).dump(2) + "\n" : csv);
        return;
    }
    if (o.format == "json") {
        write_file_atomic(o.out, rp_records_json(records).dump(2) + "\n");
        return;
    }
    write_file_atomic(o.out, csv);
    fs::path mirror = o.out;
    mirror.replace_extension(".json");
    write_file_atomic(mirror, rp_records_json(records).dump(2) + "\n");
}

int cmd_rp_scan(const Options& o) {
    require_format(o, {"text", "csv", "json"});
    ScanConfig config;
    config.p_min = o.p_min;
    config.p_max = o.p_max;
    config.workers = o.workers;
    config.budget = o.budget;
    config.max_primes = o.max_primes;
    if (!o.checkpoint.empty()) config.checkpoint = o.checkpoint;
    const auto result = scan(config);

    double max_ratio = std::nan("");
    std::uint64_t violations = 0;
    for (const auto& r : result.records) {
        if (std::isfinite(r.ratio) && !(r.ratio <= max_ratio)) max_ratio = r.ratio;
        if (static_cast<double>(r.R_p) > r.two_ln_p) {
            ++violations;
            std::cerr << "VIOLATION: R_" << r.p << " = " << r.R_p << " exceeds 2 ln p = " << format_fixed6(r.two_ln_p)
                      << "\n";
        }
    }
    if (!result.complete) {
        std::cerr << "partial: " << result.records.size() << " primes done, rerun with the same checkpoint to resume\n";
        return kOk;
    }
    write_scan_outputs(o, result.records);
    std::cerr << "primes: " << result.records.size() << ", max ratio: " << format_fixed6(max_ratio)
              << ", 2 ln p violations: " << violations << "\n";
    return kOk;
}

std::vector<std::uint64_t> stats_primes(const Options& o, std::vector<std::uint64_t> fallback) {
    return o.primes.empty() ? fallback : o.primes;
}

int cmd_stats_table1(const Options& o) {
    std::vector<std::pair<std::uint64_t, double>> rows;
    for (auto p : stats_primes(o, {101})) {
        rows.emplace_back(p, poisson_distance(trinomial_distribution(p, o.workers, o.long_run, o.budget)));
    }
    emit(o, table1_csv(rows));
    return kOk;
}

int cmd_stats_dist(const Options& o) {
    std::vector<Distribution> dists;
    for (auto p : stats_primes(o, {101})) {
        if (o.n != 0) {
            dists.push_back(ab_distribution(p, o.n, o.s, o.budget));
        } else {
            dists.push_back(trinomial_distribution(p, o.workers, o.long_run, o.budget));
        }
    }
    emit(o, dist_csv(dists));
    return kOk;
}

int cmd_stats_predict(const Options& o) {
    require_format(o, {"text", "json"});
    json rows = json::array();
    std::string text;
    for (auto p : stats_primes(o, {101})) {
        const auto v = predictor_values(p);
        const double N = boost::rational_cast<double>(v.N);
        json row{{"p", p},
                 {"J2", v.J2},
                 {"phi", v.phi},
                 {"Tp_formula", v.Tp_formula},
                 {"Tp_direct", count_Tp_direct(p)},
                 {"N", fraction(v.N)},
                 {"N_over_p2", N / (static_cast<double>(p) * static_cast<double>(p))},
                 {"E_N", v.E_N},
                 {"simple", v.simple}};
        text += "p: " + std::to_string(p) + "\nJ2: " + std::to_string(v.J2) + "\nphi: " + std::to_string(v.phi) +
                "\nTp_formula: " + std::to_string(v.Tp_formula) + "\nTp_direct: " + std::to_string(count_Tp_direct(p)) +
                "\nN: " + fraction(v.N) + "\nN_over_p2: " + format_fixed6(row["N_over_p2"].get<double>()) +
                "\nE_N: " + format_fixed6(v.E_N) + "\nsimple: " + format_fixed6(v.simple) + "\n";
        if (o.rp) {
            const double ratio = static_cast<double>(*o.rp) / v.E_N;
            row["R_p"] = *o.rp;
            row["ratio"] = ratio;
            text += "R_p: " + std::to_string(*o.rp) + "\nratio: " + format_fixed6(ratio) + "\n";
        }
        rows.push_back(row);
    }
    emit(o, o.format == "json" ? rows.dump(2) + "\n" : text);
    return kOk;
}

int cmd_stats_fixed_points(const Options& o) {
    require_format(o, {"text", "csv", "json"});
    const auto dist = fixed_point_distribution(o.perm_n);
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& v : dist.values) arr.push_back(fraction(v));
        emit(o, json{{"n", dist.n}, {"rho", arr}}.dump(2) + "\n");
        return kOk;
    }
    std::string text = "n,r,rho,value\n";
    for (std::size_t r = 0; r < dist.values.size(); ++r) {
        text += std::to_string(dist.n) + ',' + std::to_string(r) + ',' + fraction(dist.values[r]) + ',' +
                format_fixed6(boost::rational_cast<double>(dist.values[r])) + '\n';
    }
    emit(o, text);
    return kOk;
}

int cmd_stats_ratios(const Options& o) {
    std::vector<RpRecord> records;
    if (!o.from.empty()) {
        std::ifstream in(o.from);
        require(static_cast<bool>(in), ErrorCode::PreconditionViolated, "cannot read " + o.from);
        for (const auto& j : json::parse(in)) records.push_back(rp_record_from_json(j));
    } else {
        ScanConfig config;
        config.p_min = o.p_min;
        config.p_max = o.p_max;
        config.workers = o.workers;
        config.budget = o.budget;
        records = scan(config).records;
    }
    const auto summary = ratio_table(records);
    emit(o, ratios_csv(summary));
    std::cerr << "rows: " << summary.rows.size() << ", excluded (p < 11): " << summary.excluded
              << ", mean: " << format_fixed6(summary.mean) << ", stddev: " << format_fixed6(summary.stddev)
              << " (desk-scale range only)\n";
    return kOk;
}

int cmd_oracle(const Options& o) {
    const auto primes = stats_primes(o, {7});
    bool all_ok = true;
    for (auto p : primes) {
        const RpRecord brute = brute_force_Rp(p);
        const RpRecord fast = record_from_sweep(sweep_prime(p, o.workers));
        const bool same = brute.same_result(fast);
        all_ok = all_ok && same;
        std::cout << "p=" << p << " brute R_p=" << brute.R_p << " (" << brute.n << "," << brute.s << "," << brute.a
                  << "," << brute.b << ") scan R_p=" << fast.R_p << " (" << fast.n << "," << fast.s << "," << fast.a
                  << "," << fast.b << ") " << (same ? "MATCH" : "MISMATCH") << "\n";
    }
    return all_ok ? kOk : kInternal;
}

void add_field_options(CLI::App* cmd, Options& o, bool with_k = true) {
    cmd->add_option("--p", o.p, "Field characteristic (odd prime)")->required();
    if (with_k) cmd->add_option("--k", o.k, "Extension degree")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Seed for the irreducible modulus search");
}

std::map<const CLI::App*, std::string> default_formats;

void add_output_options(CLI::App* cmd, Options& o, const std::string& default_format,
                        std::vector<std::string> formats) {
    default_formats[cmd] = default_format;
    cmd->add_option("--out", o.out, "Output file (stdout when omitted)");
    cmd->add_option("--format", o.format, "Output format, default " + default_format)
        ->check(CLI::IsMember(formats));
}

void add_budget(CLI::App* cmd, Options& o) {
    cmd->add_option("--budget", o.budget, "Operation budget")
        ->envname("FFROOTS_BUDGET")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_workers(CLI::App* cmd, Options& o) {
    cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trinomial root counts over finite fields"};
    app.require_subcommand(1);
    Options o;

    auto* count = app.add_subcommand("count-roots", "Roots, cosets and bounds of x^n + a x^s + b");
    add_field_options(count, o);
    count->add_option("--n", o.n, "Leading exponent")->required();
    count->add_option("--s", o.s, "Middle exponent")->required();
    count->add_option("--a", o.a, "Middle coefficient (integer or c0,c1,... list)")->required();
    count->add_option("--b", o.b, "Constant coefficient (integer or c0,c1,... list)")->required();
    add_output_options(count, o, "text", {"text", "json"});

    auto* bounds_cmd = app.add_subcommand("bounds", "Both root bounds for (q, delta) or for a field and exponents");
    auto* q_opt = bounds_cmd->add_option("--q", o.q, "Field size");
    bounds_cmd->add_option("--delta", o.delta, "gcd(n, s, q-1)")->needs(q_opt);
    auto* p_opt = bounds_cmd->add_option("--p", o.p, "Field characteristic")->excludes(q_opt);
    bounds_cmd->add_option("--k", o.k, "Extension degree")->needs(p_opt);
    bounds_cmd->add_option("--n", o.n, "Leading exponent")->needs(p_opt);
    bounds_cmd->add_option("--s", o.s, "Middle exponent")->needs(p_opt);
    add_output_options(bounds_cmd, o, "text", {"text", "json"});

    auto* extremal = app.add_subcommand("extremal", "Extremal constructions: x^(p^k)+x-2 or x^(1+p^m)+x+1");
    add_field_options(extremal, o);
    extremal->add_option("--kind", o.kind, "frobenius (x^(p^k)+x-2) or cube (x^(1+p^m)+x+1)")->check(CLI::IsMember({"frobenius", "cube"}));
    extremal->add_option("--m", o.m, "Cube construction parameter")->check(CLI::PositiveNumber);
    add_output_options(extremal, o, "text", {"text", "json"});

    auto* family = app.add_subcommand("family-check", "Shared roots of the family c x^n - (c+1) x^s + 1");
    add_field_options(family, o);
    family->add_option("--n", o.n, "Leading exponent")->required();
    family->add_option("--s", o.s, "Middle exponent")->required();
    family->add_option("--N", o.subgroup, "Subgroup order (default q-1)");
    add_output_options(family, o, "text", {"text", "json"});

    auto* orbits = app.add_subcommand("orbits", "Exponent-pair orbits for a prime");
    orbits->add_option("--p", o.p, "Prime")->required();
    add_output_options(orbits, o, "csv", {"csv", "json"});

    auto* rp = app.add_subcommand("rp-scan", "R_p for every prime in a range");
    rp->add_option("--p-min", o.p_min, "Smallest prime")->capture_default_str();
    rp->add_option("--p-max", o.p_max, "Largest prime")->capture_default_str();
    add_workers(rp, o);
    add_budget(rp, o);
    rp->add_option("--max-primes", o.max_primes, "Stop after this many primes (resume with --checkpoint)");
    rp->add_option("--checkpoint", o.checkpoint, "Checkpoint file for resumable runs");
    add_output_options(rp, o, "csv", {"csv", "json"});

    auto* stats = app.add_subcommand("stats", "Distribution and predictor statistics");
    stats->require_subcommand(1);

    auto* table1 = stats->add_subcommand("table1", "Poisson distance of the root-count distribution");
    table1->add_option("--p", o.primes, "Prime(s)");
    add_workers(table1, o);
    add_budget(table1, o);
    table1->add_flag("--long-run", o.long_run, "Allow primes beyond 1009");
    add_output_options(table1, o, "csv", {"csv"});

    auto* dist = stats->add_subcommand("dist", "Root-count distribution against Poisson(1)");
    dist->add_option("--p", o.primes, "Prime(s)");
    auto* dn = dist->add_option("--n", o.n, "Fix the exponents (coefficient distribution only)");
    dist->add_option("--s", o.s, "Middle exponent")->needs(dn);
    dn->needs("--s");
    add_workers(dist, o);
    add_budget(dist, o);
    dist->add_flag("--long-run", o.long_run, "Allow primes beyond 1009")->excludes(dn);
    add_output_options(dist, o, "csv", {"csv"});

    auto* predict = stats->add_subcommand("predict", "N(p), E_N and the simple predictor");
    predict->add_option("--p", o.primes, "Prime(s)");
    predict->add_option("--rp", o.rp, "Known R_p to compare against E_N");
    add_output_options(predict, o, "text", {"text", "json"});

    auto* fixed = stats->add_subcommand("fixed-points", "Fixed-point distribution of random permutations");
    fixed->add_option("--n", o.perm_n, "Permutation size")->capture_default_str();
    add_output_options(fixed, o, "csv", {"csv", "json"});

    auto* ratios = stats->add_subcommand("ratios", "R_p / E_N(p) ratio table");
    auto* from = ratios->add_option("--from", o.from, "Read records from an rp-scan JSON file");
    ratios->add_option("--p-min", o.p_min, "Smallest prime")->excludes(from);
    ratios->add_option("--p-max", o.p_max, "Largest prime")->excludes(from);
    add_workers(ratios, o);
    add_budget(ratios, o);
    add_output_options(ratios, o, "csv", {"csv"});

    auto* oracle = app.add_subcommand("oracle", "Compare the scan engine with brute force (p <= 100)");
    oracle->add_option("--p", o.primes, "Prime(s)");
    add_workers(oracle, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    if (o.format.empty()) {
        for (const auto& [cmd, fmt] : default_formats) {
            if (cmd->parsed()) o.format = fmt;
        }
    }

    try {
        if (*count) return cmd_count_roots(o);
        if (*bounds_cmd) return cmd_bounds(o);
        if (*extremal) return cmd_extremal(o);
        if (*family) return cmd_family_check(o);
        if (*orbits) return cmd_orbits(o);
        if (*rp) return cmd_rp_scan(o);
        if (*table1) return cmd_stats_table1(o);
        if (*dist) return cmd_stats_dist(o);
        if (*predict) return cmd_stats_predict(o);
        if (*fixed) return cmd_stats_fixed_points(o);
        if (*ratios) return cmd_stats_ratios(o);
        if (*oracle) return cmd_oracle(o);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << " (estimate " << format_scientific(e.estimate()) << ", budget "
                  << format_scientific(e.budget()) << ")\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::InvariantViolation ? kInternal : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
