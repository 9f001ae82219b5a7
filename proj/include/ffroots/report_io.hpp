#pragma once

#include "ffroots/poisson_stats.hpp"
#include "ffroots/rp_search.hpp"
#include "ffroots/trinomial.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

// Output formats. CSVs are LF-terminated with a mandatory header row and
// fixed six-digit decimals ("nan" where a value is undefined).
namespace ffroots {

std::string format_fixed6(double v);
std::string format_scientific(double v);

/// rp_scan.csv: p,R_p,n,s,a,b,two_ln_p,N_p,E_Np,ratio
std::string rp_scan_csv(const std::vector<RpRecord>& records);
/// table1.csv: p,distance
std::string table1_csv(const std::vector<std::pair<std::uint64_t, double>>& rows);
/// dist.csv: p,r,t_p_r,poisson_r
std::string dist_csv(const std::vector<Distribution>& dists);
/// ratios.csv: p,R_p,N_p,E_Np,ratio
std::string ratios_csv(const RatioSummary& summary);

/// Record fields without the elapsed time, so files are reproducible.
nlohmann::json rp_record_to_json(const RpRecord& r);
RpRecord rp_record_from_json(const nlohmann::json& j);
nlohmann::json rp_records_json(const std::vector<RpRecord>& records);

nlohmann::json field_json(const Field& field);
nlohmann::json root_report_json(const Trinomial& f, const RootReport& report);

/// Write to a sibling temp file, then rename over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace ffroots
