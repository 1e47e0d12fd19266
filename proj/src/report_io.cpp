#include "quadlsq/report_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "quadlsq/errors.hpp"

namespace quadlsq {

namespace {

double norm_or_zero(const std::map<double, double>& m, double p) {
    const auto it = m.find(p);
    return it == m.end() ? 0.0 : it->second;
}

// Numeric columns between "n" and "error", in kCsvColumns order.
std::array<double, 15> numeric_fields(const RuleReport& r) {
    return {static_cast<double>(r.degree),
            r.mu_Q,
            r.N_omega,
            r.N_z,
            r.angle_deg,
            r.tau_inf,
            r.alpha,
            r.c_n,
            r.Omega,
            r.Gamma,
            r.cond_inf_A,
            norm_or_zero(r.residual_norms, 1.0),
            norm_or_zero(r.residual_norms, 2.0),
            norm_or_zero(r.residual_norms, kInfNorm),
            r.r_z_inf};
}

void assign_numeric_fields(RuleReport& r, const std::array<double, 15>& v) {
    r.degree = static_cast<int>(v[0]);
    r.mu_Q = v[1];
    r.N_omega = v[2];
    r.N_z = v[3];
    r.angle_deg = v[4];
    r.tau_inf = v[5];
    r.alpha = v[6];
    r.c_n = v[7];
    r.Omega = v[8];
    r.Gamma = v[9];
    r.cond_inf_A = v[10];
    r.residual_norms = {{1.0, v[11]}, {2.0, v[12]}, {kInfNorm, v[13]}};
    r.r_z_inf = v[14];
}

std::string csv_escape(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

double parse_double_field(const std::string& s) {
    if (s == "nan") return std::nan("");
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("invalid numeric field '" + s + "'");
    return v;
}

void write_vector(std::ostream& os, std::string_view label, std::span<const double> v) {
    os << label << " = [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << format_double(v[i]);
    os << "]\n";
}

void write_diagnostics(std::ostream& os, const RuleReport& r) {
    os << "degree = " << r.degree << '\n';
    os << "mu_Q = " << format_double(r.mu_Q) << '\n';
    os << "N_omega = " << format_double(r.N_omega) << '\n';
    os << "N_z = " << format_double(r.N_z) << '\n';
    os << "angle_deg = " << format_double(r.angle_deg) << '\n';
    os << "tau_inf = " << format_double(r.tau_inf) << '\n';
    os << "alpha = " << format_double(r.alpha) << '\n';
    os << "c_n = " << format_double(r.c_n) << '\n';
    os << "Omega = " << format_double(r.Omega) << '\n';
    os << "Gamma = " << format_double(r.Gamma) << '\n';
    os << "cond_inf_A = " << format_double(r.cond_inf_A) << '\n';
    for (const auto& [p, v] : r.residual_norms) {
        os << "||r(omega)||_" << (std::isinf(p) ? std::string("inf") : format_double(p)) << " = " << format_double(v)
           << '\n';
    }
    os << "||r(z*)||_inf = " << format_double(r.r_z_inf) << '\n';
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, ptr);
}

std::string csv_header() {
    std::string out;
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
        if (i) out += ',';
        out += kCsvColumns[i];
    }
    return out;
}

std::string csv_line(const SweepRow& row) {
    std::string out = csv_escape(row.report.family);
    out += ',';
    out += std::to_string(row.report.n);
    const auto values = numeric_fields(row.report);
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += ',';
        if (!row.ok()) continue;
        out += i == 0 ? std::to_string(row.report.degree) : format_double(values[i]);
    }
    out += ',';
    out += csv_escape(row.error);
    return out;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << csv_header() << '\n';
    for (const auto& row : rows) out << csv_line(row) << '\n';
}

std::vector<SweepRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != csv_header()) throw InputError("unexpected CSV header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != kCsvColumns.size()) throw InputError("CSV row has " + std::to_string(f.size()) + " fields");
        SweepRow row;
        row.report.family = f[0];
        row.report.n = static_cast<int>(parse_double_field(f[1]));
        row.error = f.back();
        if (row.ok()) {
            std::array<double, 15> v{};
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = parse_double_field(f[i + 2]);
            assign_numeric_fields(row.report, v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::ordered_json to_json(const SweepRow& row) {
    nlohmann::ordered_json j;
    j["family"] = row.report.family;
    j["n"] = row.report.n;
    const auto values = numeric_fields(row.report);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::string key(kCsvColumns[i + 2]);
        if (!row.ok())
            j[key] = nullptr;
        else if (i == 0)
            j[key] = row.report.degree;
        else
            j[key] = values[i];
    }
    j["error"] = row.ok() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(row.error);
    return j;
}

nlohmann::ordered_json to_json(std::span<const SweepRow> rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) arr.push_back(to_json(row));
    return arr;
}

std::string render_text(const RuleAnalysis& ra) {
    std::ostringstream os;
    const auto& r = ra.report;
    os << "family = " << r.family << '\n';
    os << "n = " << r.n << '\n';
    os << "interval = [" << format_double(ra.nodes.interval().a) << ", " << format_double(ra.nodes.interval().b)
       << "]\n";
    write_vector(os, "nodes", ra.nodes.nodes());
    write_vector(os, "weights", ra.solution.omega);
    write_vector(os, "z*", ra.solution.z_star);
    write_vector(os, "tau", ra.solution.tau);
    write_diagnostics(os, r);
    return os.str();
}

std::string render_text(const SweepRow& row) {
    std::ostringstream os;
    os << "family = " << row.report.family << '\n';
    os << "n = " << row.report.n << '\n';
    if (!row.ok()) {
        os << "error = " << row.error << '\n';
        return os.str();
    }
    write_diagnostics(os, row.report);
    return os.str();
}

}  // namespace quadlsq
