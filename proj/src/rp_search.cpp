#include "ffroots/rp_search.hpp"

#include "ffroots/error.hpp"
#include "ffroots/kernels.hpp"
#include "ffroots/poisson_stats.hpp"
#include "ffroots/report_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <thread>

namespace ffroots {

std::uint64_t RootHistogram::root_mass() const noexcept {
    std::uint64_t mass = 0;
    for (std::size_t r = 0; r < counts.size(); ++r) mass += r * counts[r];
    return mass;
}

void RootHistogram::add(const RootHistogram& other, std::uint64_t weight) {
    if (counts.size() < other.counts.size()) counts.resize(other.counts.size(), 0);
    for (std::size_t r = 0; r < other.counts.size(); ++r) counts[r] += weight * other.counts[r];
    total += weight * other.total;
    zero_b_incidences += weight * other.zero_b_incidences;
}

bool RpRecord::same_result(const RpRecord& o) const noexcept {
    auto same = [](double x, double y) { return (std::isnan(x) && std::isnan(y)) || x == y; };
    return p == o.p && R_p == o.R_p && n == o.n && s == o.s && a == o.a && b == o.b && same(two_ln_p, o.two_ln_p) &&
           same(two_log2_p, o.two_log2_p) && same(N_p, o.N_p) && same(E_Np, o.E_Np) && same(ratio, o.ratio);
}

std::vector<ExponentOrbit> exponent_orbits(std::uint64_t p) {
    require(p >= 5 && is_prime(p), ErrorCode::NotPrime, "exponent orbits need a prime p >= 5");
    const std::uint64_t m = p - 1;
    const auto units = units_mod(m);
    std::vector<bool> seen(m * m, false);
    std::vector<ExponentOrbit> out;
    // Scanning in lexicographic order makes the first unseen pair of each
    // orbit its smallest member.
    for (std::uint64_t n = 2; n < m; ++n) {
        for (std::uint64_t s = 1; s < n; ++s) {
            if (seen[n * m + s] || gcd3(n, s, m) != 1) continue;
            ExponentOrbit orbit{n, s, {}};
            for (auto e : units) {
                const std::uint64_t x = n * e % m, y = s * e % m;
                const std::uint64_t hi = std::max(x, y), lo = std::min(x, y);
                if (!seen[hi * m + lo]) {
                    seen[hi * m + lo] = true;
                    orbit.members.emplace_back(hi, lo);
                }
            }
            std::sort(orbit.members.begin(), orbit.members.end());
            out.push_back(std::move(orbit));
        }
    }
    return out;
}

std::uint64_t count_exponent_pairs(std::uint64_t p) {
    const std::uint64_t m = p - 1;
    std::uint64_t count = 0;
    for (std::uint64_t n = 2; n < m; ++n) {
        for (std::uint64_t s = 1; s < n; ++s) {
            if (gcd3(n, s, m) == 1) ++count;
        }
    }
    return count;
}

ExponentSweep max_roots_for_exponents(const Field& field, std::uint64_t n, std::uint64_t s) {
    const LogTable* logs = field.log_table();
    require(field.k() == 1 && logs != nullptr, ErrorCode::PreconditionViolated,
            "the incidence sweep needs a prime field with log tables");
    require(0 < s && s < n, ErrorCode::InvalidExponent, "exponents must satisfy 0 < s < n");
    const std::uint32_t p = field.p();
    const std::uint64_t m = p - 1;

    std::vector<std::uint32_t> xn(m), xs(m), row(m);
    const std::uint64_t nr = n % m, sr = s % m;
    std::uint64_t in = 0, is = 0;
    for (std::uint64_t i = 0; i < m; ++i) {
        xn[i] = logs->exp[in];
        xs[i] = logs->exp[is];
        in = (in + nr) % m;
        is = (is + sr) % m;
    }

    ExponentSweep out;
    out.histogram.counts.assign(2, 0);
    std::vector<std::uint32_t> votes(p, 0);
    const auto isa = kernels::active_isa();
    for (std::uint32_t a = 1; a < p; ++a) {
        kernels::negated_affine_row(xn, xs, a, p, row, isa);
        for (auto b : row) ++votes[b];
        out.histogram.zero_b_incidences += votes[0];
        votes[0] = 0;
        for (std::uint32_t b = 1; b < p; ++b) {
            const std::uint32_t r = votes[b];
            votes[b] = 0;
            if (r >= out.histogram.counts.size()) out.histogram.counts.resize(r + 1, 0);
            ++out.histogram.counts[r];
            if (r > out.max_roots) {
                out.max_roots = r;
                out.a = a;
                out.b = b;
            }
        }
    }
    out.histogram.total = m * m;
    return out;
}

ExponentSweep max_roots_for_exponents(std::uint64_t p, std::uint64_t n, std::uint64_t s) {
    const auto field = make_prime_field(p);
    return max_roots_for_exponents(*field, n, s);
}

PrimeSweep sweep_prime(std::uint64_t p, unsigned workers) {
    require(workers >= 1, ErrorCode::PreconditionViolated, "worker count must be at least 1");
    const auto field = make_prime_field(p);
    PrimeSweep out;
    out.p = p;
    out.orbits = exponent_orbits(p);
    out.sweeps.resize(out.orbits.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < out.orbits.size(); i = next++) {
            out.sweeps[i] = max_roots_for_exponents(*field, out.orbits[i].n, out.orbits[i].s);
        }
    };
    const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, out.orbits.size()));
    if (spawn <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(spawn);
        for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(work);
    }
    return out;
}

void fill_predictor_columns(RpRecord& record) {
    const double p = static_cast<double>(record.p);
    record.two_ln_p = 2.0 * std::log(p);
    record.two_log2_p = 2.0 * std::log2(p);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    record.N_p = record.E_Np = record.ratio = nan;
    if (record.p >= 11) {
        record.N_p = boost::rational_cast<double>(effective_N(record.p));
        record.E_Np = predictor_E(record.N_p);
        record.ratio = static_cast<double>(record.R_p) / record.E_Np;
    }
}

RpRecord record_from_sweep(const PrimeSweep& sweep) {
    RpRecord rec;
    rec.p = sweep.p;
    for (std::size_t i = 0; i < sweep.orbits.size(); ++i) {
        if (sweep.sweeps[i].max_roots > rec.R_p) {
            rec.R_p = sweep.sweeps[i].max_roots;
            rec.n = sweep.orbits[i].n;
            rec.s = sweep.orbits[i].s;
            rec.a = sweep.sweeps[i].a;
            rec.b = sweep.sweeps[i].b;
        }
    }
    fill_predictor_columns(rec);
    return rec;
}

double estimate_scan_cost(std::uint64_t p_min, std::uint64_t p_max) {
    double cost = 0;
    for (auto p : primes_in_range(std::max<std::uint64_t>(p_min, 5), p_max)) {
        const std::uint64_t m = p - 1;
        // valid pairs = (J_2(m) - 3 phi(m)) / 2; orbits are at most phi(m) long
        const double pairs = (static_cast<double>(jordan_totient_2(m)) - 3.0 * static_cast<double>(euler_phi(m))) / 2.0;
        const double orbits = std::ceil(pairs / static_cast<double>(euler_phi(m)));
        cost += orbits * static_cast<double>(p) * static_cast<double>(p);
    }
    return cost;
}

namespace {

using json = nlohmann::json;

struct Checkpoint {
    std::uint64_t last_completed = 0;
    std::vector<RpRecord> records;
};

std::optional<Checkpoint> load_checkpoint(const std::filesystem::path& path, const ScanConfig& config) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    const json doc = json::parse(in);
    require(doc.at("p_min").get<std::uint64_t>() == config.p_min && doc.at("p_max").get<std::uint64_t>() == config.p_max,
            ErrorCode::PreconditionViolated, "checkpoint " + path.string() + " belongs to a different prime range");
    Checkpoint cp;
    cp.last_completed = doc.at("last_completed_prime").get<std::uint64_t>();
    for (const auto& r : doc.at("records")) cp.records.push_back(rp_record_from_json(r));
    return cp;
}

void save_checkpoint(const std::filesystem::path& path, const ScanConfig& config, const std::vector<RpRecord>& records) {
    json doc;
    doc["p_min"] = config.p_min;
    doc["p_max"] = config.p_max;
    doc["last_completed_prime"] = records.empty() ? 0 : records.back().p;
    doc["records"] = json::array();
    for (const auto& r : records) doc["records"].push_back(rp_record_to_json(r));
    write_file_atomic(path, doc.dump(2) + "\n");
}

} // namespace

ScanResult scan(const ScanConfig& config) {
    require(config.workers >= 1, ErrorCode::PreconditionViolated, "worker count must be at least 1");
    require(config.budget > 0, ErrorCode::PreconditionViolated, "budget must be positive");
    require(config.p_min <= config.p_max, ErrorCode::PreconditionViolated, "p_min must not exceed p_max");

    ScanResult result;
    std::uint64_t start = std::max<std::uint64_t>(config.p_min, 5);
    if (config.checkpoint) {
        if (auto cp = load_checkpoint(*config.checkpoint, config)) {
            result.records = std::move(cp->records);
            start = std::max(start, cp->last_completed + 1);
        }
    }
    if (start > config.p_max) {
        result.complete = true;
        return result;
    }

    const double estimate = estimate_scan_cost(start, config.p_max);
    if (estimate > config.budget) {
        throw BudgetError(estimate, config.budget,
                          "scan over [" + std::to_string(start) + ", " + std::to_string(config.p_max) +
                              "] needs ~" + format_scientific(estimate) + " operations, budget is " +
                              format_scientific(config.budget));
    }

    std::uint64_t done_this_run = 0;
    result.complete = true;
    for (auto p : primes_in_range(start, config.p_max)) {
        if (config.max_primes && done_this_run >= *config.max_primes) {
            result.complete = false;
            break;
        }
        const auto t0 = std::chrono::steady_clock::now();
        RpRecord rec = record_from_sweep(sweep_prime(p, config.workers));
        rec.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.records.push_back(rec);
        ++done_this_run;
        if (config.checkpoint) save_checkpoint(*config.checkpoint, config, result.records);
    }
    return result;
}

RpRecord brute_force_Rp(std::uint64_t p) {
    require(p >= 5 && is_prime(p), ErrorCode::NotPrime, "brute force needs a prime p >= 5");
    require(p <= 100, ErrorCode::CapExceeded, "brute force is limited to p <= 100");
    const std::uint64_t m = p - 1;
    RpRecord rec;
    rec.p = p;
    std::vector<std::uint64_t> xn(p), xs(p);
    for (std::uint64_t n = 2; n < m; ++n) {
        for (std::uint64_t s = 1; s < n; ++s) {
            if (gcd3(n, s, m) != 1) continue;
            for (std::uint64_t x = 1; x < p; ++x) {
                xn[x] = mod_pow(x, n, p);
                xs[x] = mod_pow(x, s, p);
            }
            for (std::uint64_t a = 1; a < p; ++a) {
                for (std::uint64_t b = 1; b < p; ++b) {
                    std::uint64_t r = 0;
                    for (std::uint64_t x = 1; x < p; ++x) {
                        if ((xn[x] + a * xs[x] + b) % p == 0) ++r;
                    }
                    if (r > rec.R_p) {
                        rec.R_p = r;
                        rec.n = n;
                        rec.s = s;
                        rec.a = a;
                        rec.b = b;
                    }
                }
            }
        }
    }
    fill_predictor_columns(rec);
    return rec;
}

} // namespace ffroots
