#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "bfrg/bfrg_io.hpp"
#include "bfrg/families.hpp"
#include "bfrg/flow.hpp"
#include "bfrg/serialize.hpp"
#include "cli.hpp"

using namespace bfrg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bfrg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bfrg_cli_test_" + name);
}

}  // namespace

TEST(Cli, FlowParity) {
  const auto r = run_cli({"flow", "--family", "parity", "--n", "12", "--steps", "3", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const auto trace = read_trace_csv(in);
  ASSERT_EQ(trace.steps.size(), 4u);
  EXPECT_DOUBLE_EQ(trace.steps[0].density, 0.5);
  EXPECT_DOUBLE_EQ(trace.steps[1].density, 1.0);
  EXPECT_DOUBLE_EQ(trace.steps[2].density, 0.0);
}

TEST(Cli, FlowRandomHasAnalyticColumn) {
  const auto r = run_cli({"flow", "--family", "random", "--p0", "0.25", "--n", "18", "--steps", "6", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "step,remaining_arity,decimated_var,density_num,density_den,analytic_density");
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
    ASSERT_EQ(f.size(), 6u);
    const unsigned ell = std::stoul(f[0]);
    const double emp = std::stod(f[3]) / std::stod(f[4]);
    const double ana = std::stod(f[5]);
    const double band = 4 * std::sqrt(ana * (1 - ana) / std::ldexp(1.0, static_cast<int>(18 - ell)));
    EXPECT_NEAR(emp, ana, band) << ell;
    ++rows;
  }
  EXPECT_EQ(rows, 7);
}

TEST(Cli, FlowFromFileWithOrder) {
  const auto path = temp_file("flow.bfrg");
  write_table(random_table(6, 0.5, 3), path);
  const auto r = run_cli({"flow", "--file", path.string(), "--steps", "2", "--order", "3,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const auto trace = read_trace_csv(in);
  ASSERT_EQ(trace.steps.size(), 3u);
  EXPECT_EQ(trace.steps[1].decimated_var, 3u);
  EXPECT_EQ(trace.steps[2].decimated_var, 1u);
  std::filesystem::remove(path);
}

TEST(Cli, FlowAllWhenSmallEmitsEveryOrder) {
  const auto r = run_cli({"flow", "--family", "majority", "--n", "4", "--steps", "2", "--order-policy",
                          "all-when-small", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  int blocks = 0;
  while (in.peek() != EOF) {
    (void)read_trace_csv(in);
    ++blocks;
  }
  EXPECT_EQ(blocks, 12);
}

TEST(Cli, FlowSymmetricLargeN) {
  const auto r = run_cli({"flow", "--family", "majority", "--n", "5000", "--steps", "4", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("density_real"), std::string::npos);
}

TEST(Cli, ClassifyExamples) {
  auto r = run_cli({"classify", "--family", "mod_p", "--p", "3", "--n", "1000", "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report_from_json(r.out).label, PhaseLabel::kCompositeSuspect);

  r = run_cli({"classify", "--family", "poly", "--xi", "3", "--n", "12", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"label\":\"ANNIHILATED(3)\""), std::string::npos);

  r = run_cli({"classify", "--family", "random", "--p0", "0.5", "--n", "16", "--seed", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report_from_json(r.out).label, PhaseLabel::kGeneric);
}

TEST(Cli, ClassifyThresholdOverride) {
  const auto r = run_cli({"classify", "--family", "random", "--n", "12", "--seed", "2", "--tau-min", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_DOUBLE_EQ(report_from_json(r.out).thresholds.at("tau_min"), 0.1);
}

TEST(Cli, DetectPlantRecovered) {
  const auto r = run_cli({"detect", "--family", "planted", "--n", "4", "--xi", "1", "--flips", "1", "--method",
                          "exhaustive", "--seed", "11"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto report = decomposition_from_json(r.out);
  const auto plant = planted_with_flips(4, 1, 1, 11);
  EXPECT_EQ(report.witness, plant.polynomial);
  EXPECT_EQ(report.remainder_density, (Density{1, 4}));
}

TEST(Cli, DetectBoundNotMetExitsThree) {
  const auto r = run_cli({"detect", "--family", "random", "--n", "12", "--p0", "0.5", "--xi", "3", "--method",
                          "sieve", "--seed", "3", "--C", "0.01"});
  EXPECT_EQ(r.code, 3) << r.err;
  EXPECT_FALSE(decomposition_from_json(r.out).meets_bound);
}

TEST(Cli, DetectCapacityExitsFour) {
  const auto r = run_cli({"detect", "--family", "random", "--n", "20", "--xi", "3", "--method", "exhaustive",
                          "--seed", "3"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("2^1351"), std::string::npos);
}

TEST(Cli, CountCsv) {
  const auto r = run_cli({"count", "--n", "64,256", "--xi", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const auto rows = read_count_csv(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_LT(rows[0].margin.margin, 0);
}

TEST(Cli, GenWritesBfrg) {
  const auto path = temp_file("gen.bfrg");
  const auto r = run_cli({"gen", "--family", "random", "--n", "9", "--seed", "5", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_table(path), random_table(9, 0.5, 5));
  std::filesystem::remove(path);
}

TEST(Cli, SymFlowJson) {
  const auto r = run_cli({"sym-flow", "--family", "mod_p", "--n", "1000", "--steps", "30", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"cycle\":{"), std::string::npos);
}

TEST(Cli, SeedDeterminism) {
  const std::vector<std::string> args{"classify", "--family", "random", "--n", "14", "--seed", "99"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, MissingSeedIsPrintedAndReplays) {
  const auto first = run_cli({"flow", "--family", "random", "--n", "10", "--steps", "3"});
  ASSERT_EQ(first.code, 0);
  const auto pos = first.err.find("seed: ");
  ASSERT_NE(pos, std::string::npos);
  const std::string seed = first.err.substr(pos + 6, first.err.find('\n', pos) - pos - 6);
  const auto replay = run_cli({"flow", "--family", "random", "--n", "10", "--steps", "3", "--seed", seed});
  EXPECT_EQ(replay.out, first.out);
}

TEST(Cli, Errors) {
  EXPECT_NE(run_cli({"flow", "--family", "nonsense", "--n", "4"}).code, 0);
  EXPECT_NE(run_cli({"flow", "--file", "/nonexistent.bfrg", "--seed", "1"}).code, 0);
  EXPECT_NE(run_cli({"flow", "--family", "random", "--n", "30", "--seed", "1"}).code, 0);
  EXPECT_NE(run_cli({"flow", "--family", "random", "--seed", "1"}).code, 0);
  EXPECT_NE(run_cli({"detect", "--family", "majority", "--n", "40", "--seed", "1"}).code, 0);
  EXPECT_NE(run_cli({"flow", "--family", "mod_p", "--p", "4", "--n", "6", "--seed", "1"}).code, 0);
  EXPECT_NE(run_cli({}).code, 0);
  const auto bad = run_cli({"flow", "--family", "parity", "--n", "0", "--seed", "1"});
  EXPECT_NE(bad.code, 0);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, OutFile) {
  const auto path = temp_file("out.csv");
  const auto r = run_cli({"count", "--n", "64", "--xi", "8", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_GT(std::filesystem::file_size(path), 10u);
  std::filesystem::remove(path);
}
