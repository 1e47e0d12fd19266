#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quadlsq/analysis.hpp"

namespace quadlsq {

/// One record of a sweep. When `error` is non-empty only family and n are
/// meaningful and every numeric column is written empty (CSV) or null (JSON).
struct SweepRow {
    RuleReport report;
    std::string error;

    [[nodiscard]] bool ok() const { return error.empty(); }
};

inline constexpr std::array<std::string_view, 18> kCsvColumns = {
    "family", "n",       "degree", "mu_Q",       "N_omega",   "N_z",       "angle_deg",   "tau_inf", "alpha",
    "c_n",    "Omega",   "Gamma",  "cond_inf_A", "r_omega_1", "r_omega_2", "r_omega_inf", "r_z_inf", "error"};

/// %.17g: 17 significant digits, enough for any finite double to survive a
/// text round trip. Non-finite values print as nan, inf, -inf.
[[nodiscard]] std::string format_double(double x);

[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string csv_line(const SweepRow& row);
void write_csv(std::ostream& out, std::span<const SweepRow> rows);
/// Inverse of write_csv. Throws InputError on a header or field mismatch.
[[nodiscard]] std::vector<SweepRow> read_csv(std::istream& in);

[[nodiscard]] nlohmann::ordered_json to_json(const SweepRow& row);
[[nodiscard]] nlohmann::ordered_json to_json(std::span<const SweepRow> rows);

/// Human-readable report: nodes, weights, z*, tau and every diagnostic.
[[nodiscard]] std::string render_text(const RuleAnalysis& ra);
/// The same for the weight-free row form used by sweeps.
[[nodiscard]] std::string render_text(const SweepRow& row);

}  // namespace quadlsq
