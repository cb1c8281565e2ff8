#include "hypersolid/cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include "verify.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace hypersolid::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hypersolid");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CliEvalTest, Values) {
  EXPECT_EQ(Invoke({"eval", "--v", "4", "--d", "1", "--n", "10"}).out, "715\n");
  EXPECT_EQ(Invoke({"eval", "--v", "2", "--d", "10", "--n", "10"}).out, "460\n");
  EXPECT_EQ(Invoke({"eval", "--v", "0", "--d", "5", "--n", "1"}).out, "0\n");
  const auto both = Invoke({"eval", "--v", "50", "--d", "7", "--n", "1000", "--method", "both"});
  EXPECT_EQ(both.code, kExitOk);
  EXPECT_NE(both.out.find("methods agree"), std::string::npos);
}

TEST(CliEvalTest, Formats) {
  EXPECT_EQ(Invoke({"eval", "--v", "3", "--d", "2", "--n", "5", "--format", "csv"}).out,
            "v,d,n,method,value\n3,2,5,closed,55\n");
  const auto j = nlohmann::json::parse(Invoke({"--format", "json", "eval", "--v", "3", "--d", "2", "--n", "5"}).out);
  EXPECT_EQ(j["result"]["closed"], "55");
  EXPECT_EQ(j["consistent"], true);
  EXPECT_EQ(j["query"]["v"], 3);
}

TEST(CliEvalTest, UsageErrors) {
  EXPECT_EQ(Invoke({"eval", "--v", "-1", "--d", "1", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"eval", "--v", "x", "--d", "1", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"eval", "--v", "2", "--d", "1"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"eval", "--v", "2", "--d", "1", "--n", "1", "--method", "guess"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"eval", "--v", "2", "--d", "1", "--n", "1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST(CliTableTest, MatchesGoldens) {
  for (int v = 2; v <= 4; ++v) {
    const std::string golden = std::string(HYPERSOLID_GOLDEN_DIR) + "/table_v" + std::to_string(v);
    const auto plain = Invoke({"table", "--v", std::to_string(v), "--dmax", "10", "--nmax", "10", "--format", "csv"});
    EXPECT_EQ(plain.code, kExitOk);
    EXPECT_EQ(plain.out, ReadFile(golden + ".csv"));
    const auto gnomons = Invoke({"table", "--v", std::to_string(v), "--gnomons", "--format", "csv"});
    EXPECT_EQ(gnomons.out, ReadFile(golden + "_gnomons.csv"));
  }
}

TEST(CliTableTest, SmallGrid) {
  const auto r = Invoke({"table", "--v", "4", "--dmax", "1", "--nmax", "5", "--format", "csv"});
  EXPECT_EQ(r.out, "d/n,1,2,3,4,5\n1,1,5,15,35,70\n");
  const auto text = Invoke({"table", "--v", "4", "--dmax", "1", "--nmax", "5"});
  EXPECT_NE(text.out.find("  1 1 5 15 35 70\n"), std::string::npos);
  EXPECT_EQ(Invoke({"table", "--v", "1"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"table", "--v", "2", "--nmax", "0"}).code, kExitUsage);
}

TEST(CliTriangleTest, Rows) {
  const auto r = Invoke({"triangle", "--d", "1", "--rows", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0 | 0\n0 0 | 0\n1 1 0 | 2\n1 2 1 0 | 4\n1 3 3 1 0 | 8\n");

  const auto pascal = Invoke({"triangle", "--d", "0", "--rows", "6"});
  EXPECT_NE(pascal.out.find("0 1 4 6 4 1 0 | 16"), std::string::npos);

  const auto diag = Invoke({"triangle", "--d", "2", "--diagonals", "2", "--rows", "10"});
  EXPECT_NE(diag.out.find("diagonals (m=2): 2 3 5 8 13 21 34 55 89\n"), std::string::npos);
  EXPECT_EQ(Invoke({"triangle", "--d", "2", "--diagonals", "1"}).code, kExitUsage);
}

TEST(CliTriangleTest, Json) {
  const auto j = nlohmann::json::parse(Invoke({"triangle", "--d", "1", "--rows", "4", "--format", "json"}).out);
  EXPECT_EQ(j["result"]["rows"][4], (nlohmann::json{"1", "3", "3", "1", "0"}));
  EXPECT_EQ(j["result"]["row_sums"][4], "8");
}

TEST(CliSumsTest, Reports) {
  const auto all = Invoke({"sums", "--s", "6", "--format", "csv"});
  EXPECT_EQ(all.code, kExitOk);
  EXPECT_EQ(all.out,
            "s,fix,formula_sum,enumerated_sum,formula_multitude,enumerated_multitude,consistent\n"
            "6,none,57,57,19,19,true\n");

  const auto j = nlohmann::json::parse(Invoke({"sums", "--s", "10", "--fix", "v=2", "--format", "json"}).out);
  EXPECT_EQ(j["result"]["formula_sum"], "162");
  EXPECT_EQ(j["result"]["enumerated_multitude"], 8);
  EXPECT_EQ(j["consistent"], true);

  const auto listed = Invoke({"sums", "--s", "6", "--fix", "n=2", "--list"});
  for (const char* line : {"S(0,4,2) = 4", "S(1,3,2) = 4", "S(2,2,2) = 4", "S(3,1,2) = 4", "S(4,0,2) = 4"}) {
    EXPECT_NE(listed.out.find(line), std::string::npos) << line;
  }
}

TEST(CliSumsTest, NoClosedFormAndErrors) {
  const auto r = Invoke({"sums", "--s", "6", "--fix", "d=6", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["result"]["formula_sum"].is_null());
  EXPECT_EQ(j["result"]["enumerated_sum"], "0");
  EXPECT_EQ(Invoke({"sums", "--s", "6", "--fix", "v=7"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"sums", "--s", "6", "--fix", "q=1"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"sums", "--s", "6", "--fix", "v=x"}).code, kExitUsage);
}

TEST(CliVerifyTest, Suites) {
  const auto r = Invoke({"verify", "--suite", "oracle", "--vmax", "8", "--dmax", "10", "--nmax", "12"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("oracle:"), std::string::npos);
  EXPECT_NE(r.out.find(" 0 failures"), std::string::npos);
  EXPECT_EQ(Invoke({"verify", "--suite", "theorems", "--smax", "40"}).code, kExitOk);
  EXPECT_EQ(Invoke({"verify", "--suite", "lemmas"}).code, kExitOk);
  EXPECT_EQ(Invoke({"verify", "--suite", "nothing"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"verify", "--jobs", "0"}).code, kExitUsage);
}

TEST(CliVerifyTest, JobCountDoesNotChangeOutput) {
  const auto one = Invoke({"verify", "--suite", "all", "--format", "json", "--jobs", "1"});
  const auto four = Invoke({"verify", "--suite", "all", "--format", "json", "--jobs", "4"});
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, four.out);
  const auto j = nlohmann::json::parse(one.out);
  EXPECT_EQ(j["result"]["suites"].size(), 5u);
}

TEST(CliExitCodeTest, FailuresMapToOne) {
  std::vector<VerifyOutcome> outcomes{{"oracle", 3, {}}, {"lemmas", 2, {}}};
  EXPECT_EQ(exit_code(outcomes), kExitOk);
  outcomes[1].failures.push_back({"sum_r n=4", "10", "11"});
  EXPECT_EQ(exit_code(outcomes), kExitFailure);

  SumReport report = sum_fixed_sv(10, 2);
  EXPECT_EQ(exit_code(report), kExitOk);
  report.consistent = false;
  EXPECT_EQ(exit_code(report), kExitFailure);
  SumReport marker = sum_fixed_sd(6, 6);
  EXPECT_FALSE(marker.consistent);
  EXPECT_EQ(exit_code(marker), kExitOk);
}

TEST(CliRepresentTest, Hits) {
  const auto r = Invoke({"represent", "--value", "120", "--vmax", "4", "--dmax", "45", "--nmax", "20", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "v,d,n,value\n2,1,15,120\n2,4,8,120\n2,39,3,120\n3,0,15,120\n3,1,8,120\n3,11,4,120\n4,0,8,120\n"
            "4,22,3,120\n");
  const auto t = Invoke({"represent", "--value", "36"});
  EXPECT_NE(t.out.find("S(2,1,8) = 36"), std::string::npos);
  EXPECT_NE(t.out.find("S(2,2,6) = 36"), std::string::npos);
  EXPECT_EQ(Invoke({"represent", "--value", "2"}).out, "0 representations\n");
  EXPECT_EQ(Invoke({"represent", "--value", "0"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"represent", "--value", "-4"}).code, kExitUsage);
}

TEST(CliOutputTest, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "hypersolid_cli_test_output.csv";
  std::filesystem::remove(path);
  const auto r = Invoke({"table", "--v", "2", "--format", "csv", "--output", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(ReadFile(path), ReadFile(std::string(HYPERSOLID_GOLDEN_DIR) + "/table_v2.csv"));
  std::filesystem::remove(path);
  EXPECT_EQ(Invoke({"table", "--v", "2", "--output", "/nonexistent-dir/x.csv"}).code, kExitUsage);
}

}  // namespace
}  // namespace hypersolid::cli
