#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "quadlsq/report_io.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = quadlsq::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
    return (std::filesystem::path(QUADLSQ_DATA_DIR) / "nodes" / name).string();
}

double field(const std::string& text, const std::string& key) {
    const auto pos = text.find(key + " = ");
    if (pos == std::string::npos) return NAN;
    return std::stod(text.substr(pos + key.size() + 3));
}

std::vector<quadlsq::SweepRow> parse_rows(const std::string& csv) {
    std::istringstream in(csv);
    return quadlsq::read_csv(in);
}

}  // namespace

TEST(Cli, AnalyzeSimpsonFile) {
    const auto r = run({"analyze", "--family", "custom", "--nodes-file", data("simpson.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(field(r.out, "degree"), 3.0);
    EXPECT_NEAR(field(r.out, "mu_Q"), -4.0 / 15.0, 1e-16);
    EXPECT_NE(r.out.find("weights = [0.33333333333333331, 1.3333333333333333, 0.33333333333333331]"),
              std::string::npos);
}

TEST(Cli, AnalyzeGaussLegendre17) {
    const auto r = run({"analyze", "--family", "gl", "--n", "17"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(field(r.out, "degree"), 33.0);
    EXPECT_NEAR(field(r.out, "mu_Q"), 1.80e-10, 0.02 * 1.80e-10);
    EXPECT_NEAR(field(r.out, "angle_deg"), 0.000154, 0.05 * 0.000154);
}

TEST(Cli, AnalyzeFormats) {
    const auto csv = run({"--format", "csv", "analyze", "--family", "cc", "--n", "4"});
    ASSERT_EQ(csv.code, 0) << csv.err;
    const auto rows = parse_rows(csv.out);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NEAR(rows[0].report.mu_Q, 1.0 / 15.0, 1e-15);

    const auto js = run({"--format", "json", "analyze", "--family", "cc", "--n", "4"});
    ASSERT_EQ(js.code, 0) << js.err;
    const auto j = nlohmann::json::parse(js.out);
    EXPECT_EQ(j["report"]["degree"], 3);
    EXPECT_NEAR(j["weights"][0].get<double>(), 1.0 / 9.0, 1e-15);
    EXPECT_EQ(j["z_star"].size(), 4u);
}

TEST(Cli, ExitCodes) {
    auto r = run({"analyze", "--family", "nc", "--n", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unsupported count"), std::string::npos);

    EXPECT_EQ(run({"analyze", "--family", "bogus", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"analyze", "--family", "custom"}).code, 2);
    EXPECT_EQ(run({"analyze", "--family", "custom", "--nodes-file", "/nonexistent"}).code, 2);
    EXPECT_EQ(run({"analyze", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "analyze", "--family", "gl", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"--interval", "1", "0", "analyze", "--family", "gl", "--n", "3"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);

    r = run({"--eps-deg", "100", "analyze", "--family", "gl", "--n", "3"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("degree overflow"), std::string::npos);
}

TEST(Cli, SweepGaussLegendreDegrees) {
    const auto r = run({"sweep", "--family", "gl", "--n-min", "2", "--n-max", "12"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_rows(r.out);
    ASSERT_EQ(rows.size(), 11u);
    for (const auto& row : rows) {
        EXPECT_TRUE(row.ok());
        EXPECT_EQ(row.report.degree, 2 * row.report.n - 1);
    }
}

TEST(Cli, SweepFejerSingleRow) {
    const auto r = run({"sweep", "--family", "fejer1", "--n-min", "3", "--n-max", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_rows(r.out);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NEAR(rows[0].report.mu_Q, -0.1, 1e-14);
}

TEST(Cli, SweepRangeAndPerRowErrors) {
    EXPECT_EQ(run({"sweep", "--family", "gl", "--n-min", "0", "--n-max", "3"}).code, 2);
    EXPECT_EQ(run({"sweep", "--family", "gl", "--n-min", "5", "--n-max", "3"}).code, 2);
    EXPECT_EQ(run({"sweep", "--family", "gl", "--n-min", "1", "--n-max", "65"}).code, 2);
    EXPECT_EQ(run({"sweep", "--family", "custom", "--n-min", "1", "--n-max", "3"}).code, 2);

    const auto r = run({"sweep", "--family", "nc", "--n-min", "1", "--n-max", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_rows(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].error, "unsupported count");
    EXPECT_TRUE(rows[1].ok());
    EXPECT_EQ(rows[2].report.degree, 3);
}

TEST(Cli, SweepIsDeterministicAcrossThreadCounts) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = (dir / "quadlsq_sweep_a.csv").string();
    const auto b = (dir / "quadlsq_sweep_b.csv").string();
    ASSERT_EQ(run({"sweep", "--family", "cc", "--n-min", "2", "--n-max", "40", "--jobs", "1", "--out", a}).code, 0);
    ASSERT_EQ(run({"sweep", "--family", "cc", "--n-min", "2", "--n-max", "40", "--jobs", "8", "--out", b}).code, 0);
    auto slurp = [](const std::string& p) {
        std::ifstream f(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(f), {});
    };
    const auto first = slurp(a);
    EXPECT_FALSE(first.empty());
    EXPECT_EQ(first, slurp(b));
    ASSERT_EQ(run({"sweep", "--family", "cc", "--n-min", "2", "--n-max", "40", "--jobs", "3", "--out", a}).code, 0);
    EXPECT_EQ(first, slurp(a));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST(Cli, SweepJson) {
    const auto r = run({"--format", "json", "sweep", "--family", "nc", "--n-min", "1", "--n-max", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_TRUE(j[0]["degree"].is_null());
    EXPECT_EQ(j[1]["degree"], 1);
}

TEST(Cli, IntegratePolynomials) {
    auto r = run({"integrate", "--family", "custom", "--nodes-file", data("simpson.txt"), "--integrand", "poly:0,0,0,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(field(r.out, "Q"), 0.0);

    r = run({"integrate", "--family", "custom", "--nodes-file", data("simpson.txt"), "--integrand", "poly:0,0,0,0,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(field(r.out, "Q"), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(field(r.out, "exact"), 0.4, 1e-16);
    EXPECT_NEAR(field(r.out, "c_n"), -1.0 / 90.0, 1e-17);
}

// Reference values from tests/oracles/derive_expected.py.
TEST(Cli, IntegrateRunge) {
    const auto r = run({"integrate", "--family", "gl", "--n", "10", "--integrand", "runge"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(field(r.out, "exact"), 0.54936030677800634, 1e-15);
    EXPECT_NEAR(field(r.out, "Q"), 0.53037188482388963, 1e-14);

    const auto hi = run({"integrate", "--family", "gl", "--n", "20", "--integrand", "runge"});
    ASSERT_EQ(hi.code, 0) << hi.err;
    EXPECT_NEAR(field(hi.out, "Q"), 0.54936030677800634, 1e-3);

    // mu_Q ~ 1e-24 is below the default degree threshold: a numerical failure.
    const auto over = run({"integrate", "--family", "gl", "--n", "40", "--integrand", "runge"});
    EXPECT_EQ(over.code, 3);
    EXPECT_NE(over.err.find("degree overflow"), std::string::npos);
}

TEST(Cli, IntegrateOther) {
    EXPECT_EQ(run({"integrate", "--family", "gl", "--n", "3", "--integrand", "sinx"}).code, 2);
    EXPECT_EQ(run({"integrate", "--family", "gl", "--n", "3", "--integrand", "poly:1,,2"}).code, 2);
    const auto r = run({"integrate", "--family", "gl", "--n", "8", "--integrand", "expx"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(field(r.out, "Q"), std::exp(1.0) - std::exp(-1.0), 1e-14);

    const auto shifted =
        run({"--interval", "0", "2", "integrate", "--family", "gl", "--n", "4", "--integrand", "poly:0,0,0,1"});
    ASSERT_EQ(shifted.code, 0) << shifted.err;
    EXPECT_NEAR(field(shifted.out, "Q"), 4.0, 1e-14);
}
