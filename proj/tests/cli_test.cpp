#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "ranklab/cli/cli.hpp"
#include "ranklab/rank/partitions.hpp"
#include "ranklab/rank/rank_table.hpp"

namespace {

using namespace ranklab;
using Json = cli::Json;
using rank::Integer;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run ranklab_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ranklab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(CliTable, PartitionsLastRow) {
  const auto r = ranklab_cli({"table", "p", "--max-n", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  EXPECT_EQ(rows.front(), (std::vector<std::string>{"n", "p"}));
  EXPECT_EQ(rows.back(), (std::vector<std::string>{"100", "190569292"}));
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(CliTable, RankColumnsSumToP) {
  const auto r = ranklab_cli({"table", "rank", "--max-n", "50", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.front(), (std::vector<std::string>{"m", "n", "count"}));
  std::map<int, Integer> sums;
  for (std::size_t i = 1; i < rows.size(); ++i) sums[std::stoi(rows[i][1])] += Integer(rows[i][2]);
  ASSERT_EQ(sums.size(), 51u);
  for (const auto& [n, s] : sums) EXPECT_EQ(s, rank::partition_count(n)) << n;
}

TEST(CliTable, ModMatchesFold) {
  const auto r = ranklab_cli({"table", "mod", "--t", "3", "--max-n", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.front(), (std::vector<std::string>{"r", "t", "n", "count"}));
  ASSERT_EQ(rows.size(), 1u + 3 * 101);
  const auto table = rank::rank_table(100);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int res = std::stoi(rows[i][0]), n = std::stoi(rows[i][2]);
    Integer want = 0;
    for (int m = -n; m <= n; ++m) {
      if (((m % 3) + 3) % 3 == res) want += table.count(m, n);
    }
    EXPECT_EQ(Integer(rows[i][3]), want) << res << " " << n;
  }
}

TEST(CliTable, JsonReportCarriesConfig) {
  const auto r = ranklab_cli({"table", "p", "--max-n", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["version"], "0.1.0");
  EXPECT_EQ(j["config"]["max_n"], 5);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["rows"].back()["p"], "7");
}

TEST(CliVerify, MonotonicityEchoesExceptionSet) {
  const auto r = ranklab_cli({"verify", "monotonicity", "--max-n", "100", "--max-m", "40"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["exception_set"], j["expected_exception_set"]);
  const auto& set = j["exception_set"];
  for (const auto& p : {Json{1, 7}, Json{0, 8}, Json{3, 11}, Json{38, 40}}) {
    EXPECT_NE(std::find(set.begin(), set.end(), p), set.end()) << p.dump();
  }
  EXPECT_TRUE(j["unexpected"].empty());
}

TEST(CliVerify, TransformsPassAndAreByteIdentical) {
  const std::vector<std::string> args = {"verify", "transforms", "--samples", "50", "--seed", "7", "--tol", "1e-8"};
  const auto a = ranklab_cli(args);
  ASSERT_EQ(a.code, 0) << a.out;
  const auto b = ranklab_cli(args);
  EXPECT_EQ(a.out, b.out);
  const auto j = Json::parse(a.out);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["config"]["seed"], 7);
}

TEST(CliVerify, IdentitiesDeviationBelowTolerance) {
  const auto r = ranklab_cli({"verify", "identities", "--t", "5", "--max-n", "60"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j["items"][0]["item"], "generating_identity");
  EXPECT_LT(j["items"][0]["max_residual"].get<double>(), 1e-9);
}

TEST(CliVerify, LemmasPass) {
  const auto r = ranklab_cli({"verify", "lemmas", "--max-n", "200", "--zq-order", "15"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(CliScan, EquidistributionDecreases) {
  const auto r = ranklab_cli({"scan", "equidistribution", "--t", "7", "--n", "100,200,500"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = Json::parse(r.out);
  const auto& v = j["values"];
  ASSERT_EQ(v.size(), 3u);
  EXPECT_GE(v[0]["max_deviation"].get<double>(), v[1]["max_deviation"].get<double>());
  EXPECT_GE(v[1]["max_deviation"].get<double>(), v[2]["max_deviation"].get<double>());
}

TEST(CliScan, A3ProfileDecays) {
  const auto r = ranklab_cli({"scan", "a3", "--u", "0.25", "--eps", "1.0,0.5,0.25,0.1", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].back(), "abs_a3");
  for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_LT(std::stod(rows[i].back()), std::stod(rows[i - 1].back()));
}

TEST(CliScan, ConvexityThresholdAndFrontier) {
  const auto r = ranklab_cli({"scan", "convexity", "--t", "3", "--r", "0", "--cap", "300"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["params"]["threshold"].is_number_integer());
  EXPECT_FALSE(j["witnesses"].empty());
}

TEST(CliScan, BessenrodtOnoAsStatedFails) {
  const auto r = ranklab_cli({"scan", "bessenrodt-ono", "--cap", "50"});
  EXPECT_EQ(r.code, 1);
  const auto relaxed = ranklab_cli({"scan", "bessenrodt-ono", "--cap", "50", "--min-part", "2", "--min-sum", "10"});
  EXPECT_EQ(relaxed.code, 0);
}

TEST(CliExit, UsageErrors) {
  EXPECT_EQ(ranklab_cli({}).code, 2);
  EXPECT_EQ(ranklab_cli({"table", "bogus"}).code, 2);
  EXPECT_EQ(ranklab_cli({"table", "p", "--format", "xml"}).code, 2);
  EXPECT_EQ(ranklab_cli({"table", "mod", "--max-n", "5"}).code, 2);
  EXPECT_EQ(ranklab_cli({"table", "mod", "--t", "0"}).code, 2);
  EXPECT_EQ(ranklab_cli({"scan", "convexity", "--t", "3", "--r", "3"}).code, 2);
  EXPECT_EQ(ranklab_cli({"scan", "a3", "--u", "0.7"}).code, 2);
  EXPECT_EQ(ranklab_cli({"scan", "a3", "--eps", "0.5,1.0"}).code, 2);
  EXPECT_EQ(ranklab_cli({"verify", "transforms", "--digits", "10"}).code, 2);
  EXPECT_EQ(ranklab_cli({"verify", "transforms", "--tol", "-1e-3"}).code, 2);
  EXPECT_EQ(ranklab_cli({"table", "p", "--max-n", "5000"}).code, 2);
  EXPECT_EQ(ranklab_cli({"--help"}).code, 0);
}

TEST(CliExit, IoError) {
  const auto r = ranklab_cli({"table", "p", "--out", "/nonexistent-dir/p.csv"});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliOutput, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "ranklab_cli_test_p.csv";
  ASSERT_EQ(ranklab_cli({"table", "p", "--max-n", "10", "--out", path.string()}).code, 0);
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  EXPECT_EQ(s.str(), ranklab_cli({"table", "p", "--max-n", "10"}).out);
  std::filesystem::remove(path);
}

TEST(CliEnv, PrecisionOverride) {
  ::setenv("RANKLAB_PRECISION", "40", 1);
  const auto r = ranklab_cli({"verify", "identities", "--t", "3", "--max-n", "20"});
  ::setenv("RANKLAB_PRECISION", "junk", 1);
  const auto bad = ranklab_cli({"verify", "identities", "--t", "3", "--max-n", "20"});
  ::unsetenv("RANKLAB_PRECISION");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["config"]["digits"], 40);
  EXPECT_EQ(bad.code, 2);
  // an explicit flag wins
  ::setenv("RANKLAB_PRECISION", "40", 1);
  const auto flag = ranklab_cli({"verify", "identities", "--t", "3", "--max-n", "20", "--digits", "35"});
  ::unsetenv("RANKLAB_PRECISION");
  EXPECT_EQ(Json::parse(flag.out)["config"]["digits"], 35);
}

}  // namespace
