#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qplasma/cli/config.hpp"
#include "qplasma/cli/output.hpp"
#include "qplasma/cli/reports.hpp"
#include "qplasma/cli/sweep.hpp"

namespace qplasma::cli {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + QPLASMA_CLI_PATH + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("qplasma_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

KeyValues parse(const std::string& text) {
  std::istringstream in(text);
  return parse_key_values(in);
}

// --- config -----------------------------------------------------------------

TEST(Config, ParsesShippedFigureConfig) {
  const auto cfg = build_sweep_config(load_key_values(std::string(QPLASMA_CONFIG_DIR) + "/fig2.conf"));
  EXPECT_EQ(cfg.model, SweepModel::bgk);
  EXPECT_EQ(std::get<double>(cfg.x), 0.0);
  const auto& q = std::get<Range>(cfg.q);
  EXPECT_EQ(q.min, 1.5);
  EXPECT_EQ(q.max, 2.5);
  EXPECT_EQ(q.steps, 2001u);
  EXPECT_EQ(cfg.y, (std::vector<double>{0.0, 0.01, 0.02}));
  EXPECT_EQ(cfg.xp, 10.0);
  EXPECT_EQ(cfg.format, OutputFormat::both);
}

TEST(Config, CommentsAndWhitespace) {
  const auto kv = parse("# header\n  model = mermin   # trailing\n\nq=0.5:1:3\r\n");
  EXPECT_EQ(kv.at("model"), "mermin");
  EXPECT_EQ(kv.at("q"), "0.5:1:3");
}

TEST(Config, RangeValuesEndExactlyAtMax) {
  const Range r{0.1, 0.7, 7};
  const auto v = r.values();
  ASSERT_EQ(v.size(), 7u);
  EXPECT_EQ(v.front(), 0.1);
  EXPECT_EQ(v.back(), 0.7);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse("model bgk\n"), ConfigError);
  EXPECT_THROW(build_sweep_config(parse("colour = red\n")), ConfigError);
  EXPECT_THROW(build_sweep_config(parse("model = drude\n")), ConfigError);
  EXPECT_THROW(build_sweep_config(parse("q = 1\n")), ConfigError);                 // no range
  EXPECT_THROW(build_sweep_config(parse("x = 0:1:5\nq = 1:2:5\n")), ConfigError);  // two ranges
  EXPECT_THROW(build_sweep_config(parse("q = 2:1:5\n")), ConfigError);
  EXPECT_THROW(build_sweep_config(parse("q = 1:2\n")), ConfigError);
  EXPECT_THROW(build_sweep_config(parse("y = 0,-0.1\n")), ConfigError);
  EXPECT_THROW(build_sweep_config(parse("xp = abc\n")), ConfigError);
  EXPECT_THROW(build_sweep_config(parse("format = svg\n")), ConfigError);
  EXPECT_THROW(load_key_values("/nonexistent/qplasma.conf"), ConfigError);
}

// --- sweep table and writers -------------------------------------------------

TEST(Sweep, CsvHeaderAndShape) {
  SweepConfig cfg;
  cfg.q = Range{1.0, 1.5, 6};
  cfg.y = {0.0, 0.01};
  std::ostringstream out;
  write_csv(out, run_sweep_table(cfg, 1));
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "q,re_eps_y0,im_eps_y0,re_eps_y0.01,im_eps_y0.01");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
  }
  EXPECT_EQ(rows, 6);
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

TEST(Sweep, BranchPointNodesAreNudgedWithWarning) {
  SweepConfig cfg;
  cfg.q = Range{1.5, 2.5, 11};  // q = 2 is a node
  const auto table = run_sweep_table(cfg, 1);
  ASSERT_EQ(table.warnings.size(), 1u);
  EXPECT_NE(table.warnings[0].find("nudged"), std::string::npos);
  EXPECT_NEAR(table.axis[5], 2.0 + kNudge, 1e-15);
  EXPECT_EQ(table.skipped, 0u);
}

TEST(Sweep, ZeroFrequencyStaysReal) {
  SweepConfig cfg;
  cfg.q = Range{1.5, 2.5, 201};
  cfg.y = {0.0, 0.01, 0.02};
  cfg.xp = 10.0;
  const auto table = run_sweep_table(cfg, 4);
  for (const auto& column : table.values)
    for (const auto& v : column) {
      ASSERT_TRUE(v.has_value());
      EXPECT_LT(std::abs(v->imag()), 1e-12);
    }
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  SweepConfig cfg;
  cfg.model = SweepModel::mermin;
  cfg.x = Range{-1.0, 1.0, 301};
  cfg.q = 1.2;
  cfg.y = {0.0, 0.05};
  std::ostringstream a, b;
  write_csv(a, run_sweep_table(cfg, 1));
  write_csv(b, run_sweep_table(cfg, 7));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Sweep, ThreadResolution) {
  EXPECT_EQ(resolve_threads("3"), 3u);
  EXPECT_GE(resolve_threads("0"), 1u);
  EXPECT_GE(resolve_threads(nullptr), 1u);
  EXPECT_GE(resolve_threads("many"), 1u);
}

TEST(Sweep, SvgStructure) {
  SweepConfig cfg;
  cfg.q = Range{1.5, 2.5, 51};
  cfg.y = {0.0, 0.01};
  std::ostringstream out;
  write_svg(out, run_sweep_table(cfg, 1));
  const std::string svg = out.str();
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("viewBox=\"0 0 800 450\""), std::string::npos);
  const auto polylines = [&] {
    std::size_t count = 0;
    for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++count;
    return count;
  }();
  EXPECT_EQ(polylines, 2u);
  EXPECT_NE(svg.find("y = 0.01"), std::string::npos);
  EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
}

TEST(Output, NumberFormatting) {
  EXPECT_EQ(format_value(0.1), "0.10000000000000001");
  EXPECT_EQ(format_label(0.1), "0.1");
  EXPECT_EQ(format_label(0.0), "0");
}

TEST(Compare, DegenerateWavenumber) { EXPECT_THROW(run_compare({0.3, 0.1, 0.0, 1.0}), DegenerateQ); }

TEST(Verify, SmallRunPasses) {
  const auto report = run_verify(10, 1);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.points, 10u);
}

// --- the binary ----------------------------------------------------------------

TEST(Binary, SweepToStdout) {
  const auto r = run("sweep --q 1:2:5 --y 0,0.1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("q,re_eps_y0,im_eps_y0,re_eps_y0.1,im_eps_y0.1\n", 0), 0u);
}

TEST(Binary, SweepWritesFilesFromConfig) {
  const fs::path dir = scratch_dir();
  const std::string stem = (dir / "fig1").string();
  const auto r = run("sweep --config " + std::string(QPLASMA_CONFIG_DIR) + "/fig1.conf --output " + stem);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(fs::exists(stem + ".csv"));
  EXPECT_TRUE(fs::exists(stem + ".svg"));
  const std::string csv = slurp(stem + ".csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2002);
  fs::remove_all(dir);
}

TEST(Binary, SweepIsByteIdenticalAcrossThreadCounts) {
  const fs::path dir = scratch_dir();
  const std::string cfg = std::string(QPLASMA_CONFIG_DIR) + "/fig3.conf";
  EXPECT_EQ(run("sweep --config " + cfg + " --format csv --output " + (dir / "t1").string(), "QPLASMA_THREADS=1").exit_code, 0);
  EXPECT_EQ(run("sweep --config " + cfg + " --format csv --output " + (dir / "t8").string(), "QPLASMA_THREADS=8").exit_code, 0);
  EXPECT_EQ(slurp(dir / "t1.csv"), slurp(dir / "t8.csv"));
  fs::remove_all(dir);
}

TEST(Binary, SweepConfigErrorIsUsageError) {
  EXPECT_EQ(run("sweep --q 1").exit_code, 2);
  EXPECT_EQ(run("sweep --config /nonexistent.conf").exit_code, 2);
  EXPECT_EQ(run("sweep --model drude --q 1:2:3").exit_code, 2);
}

TEST(Binary, CompareText) {
  const auto r = run("compare --x 0.3 --y 0.1 --q 1.0");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("bgk"), std::string::npos);
  EXPECT_NE(r.out.find("|bgk-mermin|"), std::string::npos);
}

TEST(Binary, CompareJsonLines) {
  const auto r = run("compare --x 0.3 --y 0.1 --q 1.0 --json");
  EXPECT_EQ(r.exit_code, 0);
  std::istringstream lines(r.out);
  std::vector<nlohmann::json> records;
  for (std::string line; std::getline(lines, line);) records.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(records.size(), 6u);
  EXPECT_EQ(records[0]["model"], "bgk");
  EXPECT_NEAR(records[0]["re"].get<double>(), 3.2533111735155772597, 1e-12);
  EXPECT_NEAR(records[0]["im"].get<double>(), 1.449120267605880279, 1e-12);
  EXPECT_EQ(records[3]["pair"], "bgk-mermin");
}

TEST(Binary, CompareRejectsZeroWavenumber) { EXPECT_EQ(run("compare --x 0.3 --y 0.1 --q 0").exit_code, 2); }

TEST(Binary, CompareMissingOptionIsUsageError) { EXPECT_EQ(run("compare --x 0.3").exit_code, 2); }

TEST(Binary, ComparePoleIsEvaluationError) { EXPECT_EQ(run("compare --x 0 --y 0 --q 2").exit_code, 1); }

TEST(Binary, KohnDimensionless) {
  const auto r = run("kohn --x 0.005");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("q1 q=2.00498756211"), std::string::npos);
  EXPECT_NE(r.out.find("companion"), std::string::npos);
}

TEST(Binary, KohnPhysical) {
  const auto r = run("kohn --omega 1e14 --kf 1.36e10 --vf 1.57e6");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("k1 = "), std::string::npos);
  EXPECT_EQ(run("kohn --omega 1e14 --kf 1.36e10").exit_code, 2);
  EXPECT_EQ(run("kohn --x 0.1 --omega 1e14 --kf 1.36e10 --vf 1.57e6").exit_code, 2);
}

TEST(Binary, Verify) {
  const auto r = run("verify --points 20 --seed 5");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Binary, UsageErrors) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

}  // namespace
}  // namespace qplasma::cli
