#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "quadlsq/analysis.hpp"
#include "quadlsq/errors.hpp"
#include "quadlsq/integrand.hpp"
#include "quadlsq/nodes.hpp"
#include "quadlsq/report_io.hpp"

namespace quadlsq::cli {

namespace {

constexpr int kMaxSweepN = 64;

struct GlobalOptions {
    std::string format = "text";
    bool format_given = false;
    std::optional<double> eps_deg;
    std::vector<double> interval;

    [[nodiscard]] Interval make_interval() const {
        if (interval.empty()) return {};
        return Interval::make(interval[0], interval[1]);
    }

    [[nodiscard]] DegreeTolerance tolerance() const {
        DegreeTolerance tol;
        if (eps_deg) {
            if (!std::isfinite(*eps_deg) || *eps_deg <= 0.0) throw InputError("--eps-deg must be positive");
            tol.absolute = *eps_deg;
        }
        return tol;
    }
};

struct RuleOptions {
    std::string family;
    int n = 0;
    std::string nodes_file;
};

Family require_family(const std::string& name) {
    const auto f = parse_family(name);
    if (!f) throw InputError("unknown family '" + name + "'");
    return *f;
}

NodeSet nodes_for(const RuleOptions& ro, const GlobalOptions& g) {
    const Family fam = require_family(ro.family);
    const Interval iv = g.make_interval();
    if (fam == Family::custom) {
        if (ro.nodes_file.empty()) throw InputError("--family custom needs --nodes-file");
        return load_node_file(ro.nodes_file, iv);
    }
    if (!ro.nodes_file.empty()) throw InputError("--nodes-file is only valid with --family custom");
    return generate(FamilySpec{fam, ro.n, {}, iv});
}

std::string family_label(const RuleOptions& ro) { return std::string(family_name(require_family(ro.family))); }

nlohmann::ordered_json json_vector(std::span<const double> v) {
    auto arr = nlohmann::ordered_json::array();
    for (double x : v) arr.push_back(x);
    return arr;
}

int cmd_analyze(const RuleOptions& ro, const GlobalOptions& g, std::ostream& out) {
    const NodeSet ns = nodes_for(ro, g);
    const RuleAnalysis ra = analyze_rule(family_label(ro), ns, g.tolerance());
    const SweepRow row{ra.report, {}};
    if (g.format == "csv") {
        out << csv_header() << '\n' << csv_line(row) << '\n';
    } else if (g.format == "json") {
        nlohmann::ordered_json j;
        j["report"] = to_json(row);
        j["nodes"] = json_vector(ns.nodes());
        j["weights"] = json_vector(ra.solution.omega);
        j["z_star"] = json_vector(ra.solution.z_star);
        j["tau"] = json_vector(ra.solution.tau);
        out << j.dump(2) << '\n';
    } else {
        out << render_text(ra);
    }
    return kExitOk;
}

SweepRow sweep_row(Family fam, int n, const GlobalOptions& g, const DegreeTolerance& tol) {
    SweepRow row;
    row.report.family = std::string(family_name(fam));
    row.report.n = n;
    try {
        const NodeSet ns = generate(FamilySpec{fam, n, {}, g.make_interval()});
        row.report = analyze_rule(row.report.family, ns, tol).report;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

int cmd_sweep(const RuleOptions& ro, int n_min, int n_max, const std::string& out_path, int jobs,
              const GlobalOptions& g, std::ostream& out) {
    const Family fam = require_family(ro.family);
    if (fam == Family::custom) throw InputError("sweep needs a generated family");
    if (n_min < 1 || n_min > n_max || n_max > kMaxSweepN)
        throw InputError("need 1 <= n-min <= n-max <= " + std::to_string(kMaxSweepN));
    const DegreeTolerance tol = g.tolerance();
    (void)g.make_interval();

    const int count = n_max - n_min + 1;
    std::vector<SweepRow> rows(count);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) rows[i] = sweep_row(fam, n_min + i, g, tol);
    };
    const int workers = std::clamp(jobs, 1, count);
    {
        std::vector<std::jthread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw InputError("cannot write '" + out_path + "'");
    }
    std::ostream& sink = out_path.empty() ? out : file;
    const std::string format = g.format_given ? g.format : "csv";
    if (format == "json") {
        sink << to_json(rows).dump(2) << '\n';
    } else if (format == "text") {
        for (std::size_t i = 0; i < rows.size(); ++i) sink << (i ? "\n" : "") << render_text(rows[i]);
    } else {
        write_csv(sink, rows);
    }
    return kExitOk;
}

int cmd_integrate(const RuleOptions& ro, const std::string& spec, const GlobalOptions& g, std::ostream& out) {
    const Integrand f = parse_integrand(spec);
    const NodeSet ns = nodes_for(ro, g);
    const RuleAnalysis ra = analyze_rule(family_label(ro), ns, g.tolerance());
    const double q = apply_rule(ns.nodes(), ra.solution.omega, f);
    const bool has_exact = static_cast<bool>(f.exact);
    const double exact = has_exact ? f.exact(ns.interval()) : 0.0;
    const double c_n = ra.report.c_n;

    if (g.format == "json") {
        nlohmann::ordered_json j;
        j["family"] = ra.report.family;
        j["n"] = ra.report.n;
        j["integrand"] = f.name;
        j["Q"] = q;
        j["exact"] = has_exact ? nlohmann::ordered_json(exact) : nlohmann::ordered_json(nullptr);
        j["error"] = has_exact ? nlohmann::ordered_json(exact - q) : nlohmann::ordered_json(nullptr);
        j["degree"] = ra.report.degree;
        j["c_n"] = c_n;
        out << j.dump(2) << '\n';
    } else if (g.format == "csv") {
        out << "family,n,integrand,Q,exact,error,degree,c_n\n";
        out << ra.report.family << ',' << ra.report.n << ",\"" << f.name << "\"," << format_double(q) << ','
            << (has_exact ? format_double(exact) : "") << ',' << (has_exact ? format_double(exact - q) : "") << ','
            << ra.report.degree << ',' << format_double(c_n) << '\n';
    } else {
        out << "integrand = " << f.name << '\n';
        out << "Q = " << format_double(q) << '\n';
        if (has_exact) {
            out << "exact = " << format_double(exact) << '\n';
            out << "error = " << format_double(exact - q) << '\n';
        }
        out << "degree = " << ra.report.degree << '\n';
        out << "c_n = " << format_double(c_n) << '\n';
    }
    return kExitOk;
}

void add_rule_options(CLI::App* sub, RuleOptions& ro, bool with_n) {
    sub->add_option("--family", ro.family, "nc, fejer1, cc, gl or custom")->required();
    if (with_n) sub->add_option("--n", ro.n, "number of nodes");
    sub->add_option("--nodes-file", ro.nodes_file, "node file for --family custom");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Least-squares and minimax analysis of interpolatory quadrature rules", "quadlsq"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--eps-deg", g.eps_deg, "absolute zero threshold for the degree test");
    app.add_option("--interval", g.interval, "integration interval a b")->expected(2);
    app.fallthrough();

    RuleOptions analyze_ro;
    auto* analyze = app.add_subcommand("analyze", "weights, minimax solution and diagnostics for one rule");
    add_rule_options(analyze, analyze_ro, true);

    RuleOptions sweep_ro;
    int n_min = 0, n_max = 0, jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep", "one report row per node count");
    sweep->add_option("--family", sweep_ro.family, "nc, fejer1, cc or gl")->required();
    sweep->add_option("--n-min", n_min, "smallest node count")->required();
    sweep->add_option("--n-max", n_max, "largest node count")->required();
    sweep->add_option("--out", out_path, "write to this file instead of stdout");
    sweep->add_option("--jobs", jobs, "worker threads");

    RuleOptions integrate_ro;
    std::string integrand;
    auto* integ = app.add_subcommand("integrate", "apply a rule to a test integrand");
    add_rule_options(integ, integrate_ro, true);
    integ->add_option("--integrand", integrand, "poly:c0,c1,..., runge or expx")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    g.format_given = app.get_option("--format")->count() > 0;

    try {
        if (*analyze) return cmd_analyze(analyze_ro, g, out);
        if (*sweep) return cmd_sweep(sweep_ro, n_min, n_max, out_path, jobs, g, out);
        return cmd_integrate(integrate_ro, integrand, g, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace quadlsq::cli
