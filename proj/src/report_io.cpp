#include "ffroots/report_io.hpp"

#include "ffroots/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace ffroots {

using nlohmann::json;

std::string format_fixed6(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string format_scientific(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string rp_scan_csv(const std::vector<RpRecord>& records) {
    std::string out = "p,R_p,n,s,a,b,two_ln_p,N_p,E_Np,ratio\n";
    for (const auto& r : records) {
        out += std::to_string(r.p) + ',' + std::to_string(r.R_p) + ',' + std::to_string(r.n) + ',' +
               std::to_string(r.s) + ',' + std::to_string(r.a) + ',' + std::to_string(r.b) + ',' +
               format_fixed6(r.two_ln_p) + ',' + format_fixed6(r.N_p) + ',' + format_fixed6(r.E_Np) + ',' +
               format_fixed6(r.ratio) + '\n';
    }
    return out;
}

std::string table1_csv(const std::vector<std::pair<std::uint64_t, double>>& rows) {
    std::string out = "p,distance\n";
    for (const auto& [p, d] : rows) out += std::to_string(p) + ',' + format_fixed6(d) + '\n';
    return out;
}

std::string dist_csv(const std::vector<Distribution>& dists) {
    std::string out = "p,r,t_p_r,poisson_r\n";
    for (const auto& d : dists) {
        for (std::size_t r = 0; r <= d.r_max(); ++r) {
            out += std::to_string(d.p) + ',' + std::to_string(r) + ',' + format_fixed6(d.value(r)) + ',' +
                   format_fixed6(poisson_pmf(static_cast<unsigned>(r))) + '\n';
        }
    }
    return out;
}

std::string ratios_csv(const RatioSummary& summary) {
    std::string out = "p,R_p,N_p,E_Np,ratio\n";
    for (const auto& r : summary.rows) {
        out += std::to_string(r.p) + ',' + std::to_string(r.R_p) + ',' + format_fixed6(r.N_p) + ',' +
               format_fixed6(r.E_Np) + ',' + format_fixed6(r.ratio) + '\n';
    }
    return out;
}

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_or_nan(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

} // namespace

json rp_record_to_json(const RpRecord& r) {
    return json{{"p", r.p},
                {"R_p", r.R_p},
                {"witness", {{"n", r.n}, {"s", r.s}, {"a", r.a}, {"b", r.b}}},
                {"two_ln_p", r.two_ln_p},
                {"two_log2_p", r.two_log2_p},
                {"N_p", number_or_null(r.N_p)},
                {"E_Np", number_or_null(r.E_Np)},
                {"ratio", number_or_null(r.ratio)}};
}

RpRecord rp_record_from_json(const json& j) {
    RpRecord r;
    r.p = j.at("p").get<std::uint64_t>();
    r.R_p = j.at("R_p").get<std::uint64_t>();
    const auto& w = j.at("witness");
    r.n = w.at("n").get<std::uint64_t>();
    r.s = w.at("s").get<std::uint64_t>();
    r.a = w.at("a").get<std::uint64_t>();
    r.b = w.at("b").get<std::uint64_t>();
    r.two_ln_p = j.at("two_ln_p").get<double>();
    r.two_log2_p = j.at("two_log2_p").get<double>();
    r.N_p = number_or_nan(j.at("N_p"));
    r.E_Np = number_or_nan(j.at("E_Np"));
    r.ratio = number_or_nan(j.at("ratio"));
    return r;
}

json rp_records_json(const std::vector<RpRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(rp_record_to_json(r));
    return arr;
}

json field_json(const Field& field) {
    json j{{"p", field.p()}, {"k", field.k()}, {"q", field.q()}, {"generator", field.to_string(field.generator())}};
    if (field.k() > 1) {
        std::string modulus;
        for (std::size_t i = 0; i < field.modulus().size(); ++i) {
            if (i) modulus += ',';
            modulus += std::to_string(field.modulus()[i]);
        }
        j["modulus"] = modulus;
        j["seed"] = *field.seed();
    }
    return j;
}

json root_report_json(const Trinomial& f, const RootReport& report) {
    const Field& F = *f.field;
    const DeltaBound bound = delta_bound(F.q(), report.delta);
    json roots = json::array();
    for (const auto& x : report.roots) roots.push_back(x.coeffs);
    json reduced = json::array();
    for (const auto& y : report.reduced_roots) reduced.push_back(y.coeffs);
    return json{{"field", field_json(F)},
                {"trinomial",
                 {{"n", f.n},
                  {"s", f.s},
                  {"lead", f.lead.coeffs},
                  {"a", f.a.coeffs},
                  {"b", f.b.coeffs}}},
                {"delta", report.delta},
                {"r", report.count()},
                {"roots", roots},
                {"cosets", report.cosets},
                {"reduced_roots", reduced},
                {"bounds", {{"new_bound", bound.new_bound}, {"old_bound", bound.old_bound}}}};
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(static_cast<bool>(out), ErrorCode::PreconditionViolated, "cannot write " + tmp.string());
        out << content;
        require(static_cast<bool>(out), ErrorCode::PreconditionViolated, "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace ffroots
