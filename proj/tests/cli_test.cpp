#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "cli_support.hpp"

namespace {

using tamegen::testing::run_cli;
using nlohmann::json;

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, ConstructStep2Json) {
  auto r = run_cli("construct 4 6 7 --json");
  ASSERT_EQ(r.exit_code, 0);
  json j = json::parse(r.output);
  EXPECT_EQ(j["status"], "constructed");
  EXPECT_EQ(j["case"], "step2");
  EXPECT_EQ(j["parameters"]["m"], 1);
  EXPECT_EQ(j["parameters"]["u"], json::array({"3/2"}));
  EXPECT_EQ(j["multidegree"], json::array({4, 6, 7}));
  EXPECT_EQ(j["verification"]["passed"], true);
  EXPECT_EQ(j["verification"]["jacobian_constant"], "1");
  EXPECT_EQ(j["map"].size(), 3u);
  EXPECT_FALSE(run_cli("construct 4 6 7 --json --no-expand").output.empty());
  EXPECT_FALSE(json::parse(run_cli("construct 4 6 7 --json --no-expand").output).contains("map"));
}

TEST(Cli, ConstructUnknownExitsTwo) {
  auto r = run_cli("construct 3 4 5");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("unknown"), std::string::npos);
  EXPECT_EQ(json::parse(run_cli("construct 5 3 4 --json").output)["status"], "unknown");
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run_cli("construct 3 x 5").exit_code, 1);
  EXPECT_EQ(run_cli("construct 0 4 5").exit_code, 1);
  EXPECT_EQ(run_cli("construct 3 4").exit_code, 1);
  EXPECT_EQ(run_cli("construct 0x10 4 5").exit_code, 1);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 1);
  EXPECT_EQ(run_cli("certify-pair 3 6").exit_code, 1);
}

TEST(Cli, Threshold) {
  json t = json::parse(run_cli("threshold 4 14 --json").output);
  EXPECT_EQ(t["e"], 28);
  EXPECT_EQ(t["r"], 12);
  EXPECT_EQ(t["c0"], 16);
  EXPECT_EQ(t["remark1_applied"], false);
  EXPECT_FALSE(t.contains("sylvester_bound"));
  json s = json::parse(run_cli("threshold 3 5 --json").output);
  EXPECT_EQ(s["c0"], 10);
  EXPECT_EQ(s["remark1_applied"], true);
  EXPECT_EQ(s["sylvester_bound"], 8);
  EXPECT_EQ(run_cli("threshold 3 5").exit_code, 0);
}

TEST(Cli, VerifyWordFile) {
  std::string good = write_temp("tamegen_good.word", "# (3,5,8)\nE(x, z^3)\nE(y, z^5)\nE(z, x*y)\n");
  EXPECT_EQ(run_cli("verify " + good + " --expect 3,5,8").exit_code, 0);
  EXPECT_EQ(run_cli("verify " + good + " --expect 3,5,9").exit_code, 3);
  json j = json::parse(run_cli("verify " + good + " --json").output);
  EXPECT_EQ(j["verification"]["multidegree"], json::array({3, 5, 8}));
  std::string bad = write_temp("tamegen_bad.word", "E(x, z^3)\nE(z, z + 1)\n");
  EXPECT_EQ(run_cli("verify " + bad).exit_code, 1);
  EXPECT_EQ(run_cli("verify /nonexistent/word").exit_code, 1);
}

TEST(Cli, AtlasAndCertify) {
  auto atlas = run_cli("atlas 3 4 --cmax 7");
  ASSERT_EQ(atlas.exit_code, 0);
  EXPECT_EQ(atlas.output, "(3,4,5) unknown\n(3,4,6) fact1-semigroup\n(3,4,7) fact1-semigroup\n");

  auto c414 = run_cli("certify-pair 4 14 --json");
  EXPECT_EQ(c414.exit_code, 2);
  json j = json::parse(c414.output);
  EXPECT_EQ(j["certified"], false);
  EXPECT_EQ(j["uncovered"], json::array({15}));
  EXPECT_EQ(run_cli("certify-pair 4 6 --probe 5").exit_code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  EXPECT_EQ(run_cli("construct 5 8 14 --json").output, run_cli("construct 5 8 14 --json").output);
  EXPECT_EQ(run_cli("atlas 5 8 --cmax 40 --json").output, run_cli("atlas 5 8 --cmax 40 --json").output);
}

}  // namespace
