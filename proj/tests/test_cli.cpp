#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aeris/cli.hpp"

using namespace aeris;
namespace fs = std::filesystem;

namespace {

const std::string kScenarioDir = AERIS_SCENARIO_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("aeris");
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

Scenario quick_scenario() {
  auto s = load_scenario(kScenarioDir + "/default.json");
  s.trials = 20000;  // keep the in-process commands fast
  return s;
}

}  // namespace

TEST_CASE("metrics writes csv and json outputs") {
  const std::string out = "cli_test_metrics";
  fs::remove_all(out);
  CHECK(cli::run_command("metrics", quick_scenario(), out) == cli::kOk);
  CHECK(fs::exists(out + "/metrics.csv"));
  CHECK(fs::exists(out + "/metrics.json"));
  const std::string csv = slurp(out + "/metrics.csv");
  CHECK(csv.find("outage_uav") != std::string::npos);
  CHECK(csv.find("outage_irs") != std::string::npos);
  CHECK(csv.find("hover_endurance_s") != std::string::npos);
  CHECK(csv.find(cli::kVersion) != std::string::npos);
  fs::remove_all(out);
}

TEST_CASE("simulate respects the trial override and reports errors bars") {
  const std::string out = "cli_test_simulate";
  fs::remove_all(out);
  CHECK(cli::run_command("simulate", quick_scenario(), out) == cli::kOk);
  const std::string csv = slurp(out + "/simulate.csv");
  CHECK(csv.find("outage_se_uav") != std::string::npos);
  CHECK(csv.find("irs_select_freq") != std::string::npos);
  CHECK(csv.find("20000") != std::string::npos);
  fs::remove_all(out);
}

TEST_CASE("unknown command is a schema error") {
  CHECK(cli::run_command("transmogrify", quick_scenario(), "cli_test_bad") ==
        cli::kSchemaError);
}

TEST_CASE("validate is byte-deterministic for a fixed seed") {
  const std::string out_a = "cli_test_det_a";
  const std::string out_b = "cli_test_det_b";
  fs::remove_all(out_a);
  fs::remove_all(out_b);
  auto s = quick_scenario();
  s.n_elements = 40;
  CHECK(cli::run_command("validate", s, out_a) == cli::kOk);
  CHECK(cli::run_command("validate", s, out_b) == cli::kOk);
  CHECK(slurp(out_a + "/validate.csv") == slurp(out_b + "/validate.csv"));
  CHECK(slurp(out_a + "/validate.json") == slurp(out_b + "/validate.json"));
  fs::remove_all(out_a);
  fs::remove_all(out_b);
}

TEST_CASE("full argument parser") {
  const std::string out = "cli_test_argv";
  fs::remove_all(out);
  CHECK(run_cli({"metrics", "--scenario", kScenarioDir + "/default.json",
                 "--out", out}) == cli::kOk);
  CHECK(fs::exists(out + "/metrics.csv"));
  fs::remove_all(out);

  // Parse/usage errors map to the schema exit code.
  CHECK(run_cli({}) == cli::kSchemaError);
  CHECK(run_cli({"metrics"}) == cli::kSchemaError);
  CHECK(run_cli({"metrics", "--scenario", "no_such_file.json"}) ==
        cli::kSchemaError);
  CHECK(run_cli({"warp", "--scenario", kScenarioDir + "/default.json"}) ==
        cli::kSchemaError);
  CHECK(run_cli({"metrics", "--scenario", kScenarioDir + "/default.json",
                 "--grid", "height_m=nonsense"}) == cli::kSchemaError);

  // A grid outside the feasible height band is infeasible, not a crash.
  CHECK(run_cli({"metrics", "--scenario", kScenarioDir + "/default.json",
                 "--out", out, "--grid", "height_m=600:700:50"}) ==
        cli::kInfeasible);
  fs::remove_all(out);
}

TEST_CASE("grid sweeps emit one row per point") {
  const std::string out = "cli_test_grid";
  fs::remove_all(out);
  CHECK(run_cli({"metrics", "--scenario", kScenarioDir + "/default.json",
                 "--out", out, "--grid", "height_m=100:300:100"}) == cli::kOk);
  const std::string csv = slurp(out + "/metrics.csv");
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 4);  // header + three sweep points
  CHECK(csv.find("height_m") != std::string::npos);
  fs::remove_all(out);
}
