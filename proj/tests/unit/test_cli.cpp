#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fuzzyess/cli/app.hpp"
#include "fuzzyess/cli/format.hpp"

using fuzzyess::cli::format_fixed;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fuzzyess");
  std::ostringstream out;
  std::ostringstream err;
  const int code = fuzzyess::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(FUZZYESS_FIXTURE_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(FormatFixed, Rounding) {
  EXPECT_EQ(format_fixed(0.3970140, 3), "0.397");
  EXPECT_EQ(format_fixed(0.0, 3), "0.000");
  EXPECT_EQ(format_fixed(-0.0001, 3), "0.000");
  EXPECT_EQ(format_fixed(2.5, 0 + 1), "2.5");
  EXPECT_EQ(format_fixed(0.125, 2), "0.13");
  EXPECT_EQ(format_fixed(-0.125, 2), "-0.13");
  // 0.145 is stored slightly below the decimal value.
  EXPECT_EQ(format_fixed(0.145, 2), "0.14");
  EXPECT_EQ(format_fixed(95.0 / 96.0, 3), "0.990");
  EXPECT_EQ(format_fixed(std::nan(""), 3), "-");
}

TEST(OutputSpec, Precision) {
  fuzzyess::cli::OutputSpec spec;
  spec.precision = 0;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec.precision = 12;
  EXPECT_NO_THROW(spec.validate());
  spec.precision = 13;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(CsvField, Quoting) {
  EXPECT_EQ(fuzzyess::cli::csv_field("plain"), "plain");
  EXPECT_EQ(fuzzyess::cli::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(fuzzyess::cli::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Analyze, FirstExampleTable) {
  const Result r = run({"analyze", "--game", fixture("table1.json"), "--mode", "ess"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("s1             0.397"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("s2             0.000"), std::string::npos);
  EXPECT_NE(r.out.find("s3             0.603"), std::string::npos);
  EXPECT_NE(r.out.find("ranking: s3 > s1 > s2"), std::string::npos);
  EXPECT_EQ(r.out.find("Nash"), std::string::npos);
}

TEST(Analyze, SecondExampleBoth) {
  const Result r = run({"analyze", "--game", fixture("table2.json"), "--mode", "both", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* line : {"membership,s1,,0.222", "membership,s2,,0.349", "membership,s3,,0.651",
                           "symmetric_nash,s1,s1,0.500", "symmetric_nash,s2,s2,0.854", "symmetric_nash,s3,s3,0.958"}) {
    EXPECT_NE(r.out.find(line), std::string::npos) << line;
  }
  EXPECT_EQ(r.out.rfind("section,row,column,value\n", 0), 0u);
}

TEST(Analyze, Json) {
  const Result r = run({"analyze", "--game", fixture("table1.json"), "--format", "json", "--precision", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["ess"]["memberships"][0].get<double>(), 0.397);
  EXPECT_TRUE(doc["ess"]["resistibility"][0][0].is_null());
  EXPECT_EQ(doc["ess"]["ranking"][0], "s3");
  EXPECT_EQ(doc["nash"]["symmetric_degrees"][0].get<double>(), 0.9583);
  EXPECT_EQ(doc["ess"]["diagnostics"][0][1]["kind"], "full");
}

TEST(Analyze, Deterministic) {
  const auto args = std::vector<std::string>{"analyze", "--game", fixture("table2.json")};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Analyze, MinTNormUsesGrid) {
  const Result r = run({"analyze", "--game", fixture("table1.json"), "--mode", "nash", "--tnorm", "min", "--format",
                        "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  // Min-combined weights put less mass in the tails than the product.
  EXPECT_NE(r.out.find("symmetric_nash,s1,s1,0.93"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("symmetric_nash,s1,s1,0.958"), std::string::npos);
}

TEST(Analyze, Errors) {
  const auto bad = temp_file("fuzzyess_bad.json", "{\"type\": \"symmetric\", \"strategies\": [\"a\"");
  Result r = run({"analyze", "--game", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("line 1"), std::string::npos) << r.err;

  const auto nonsquare = temp_file("fuzzyess_nonsquare.json",
                                   R"({"type": "symmetric", "strategies": ["a", "b"], "payoffs": [[1, 2, 3], [1, 2, 3]]})");
  r = run({"analyze", "--game", nonsquare.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());

  EXPECT_EQ(run({"analyze", "--game", fixture("table1.json"), "--mode", "sideways"}).code, 2);
  EXPECT_EQ(run({"analyze", "--game", fixture("table1.json"), "--precision", "0"}).code, 2);
  EXPECT_EQ(run({"analyze", "--game", fixture("table1.json"), "--grid", "10"}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({}).code, 2);

  const auto bimatrix = temp_file("fuzzyess_bi.json", R"({"type": "bimatrix", "strategies1": ["u", "d"],
    "strategies2": ["l", "r"], "payoffs1": [[1, 0], [0, 1]], "payoffs2": [[0, 1], [1, 0]]})");
  EXPECT_EQ(run({"analyze", "--game", bimatrix.string(), "--mode", "ess"}).code, 2);
  EXPECT_EQ(run({"analyze", "--game", bimatrix.string(), "--mode", "nash"}).code, 0);
}

TEST(Analyze, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "fuzzyess_out.csv";
  std::filesystem::remove(path);
  const Result r = run({"analyze", "--game", fixture("table1.json"), "--format", "csv", "--output", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), run({"analyze", "--game", fixture("table1.json"), "--format", "csv"}).out);
}

TEST(Verify, Examples) {
  Result r = run({"verify", "--count", "1", "--seed", "7", "--sizes", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("  s1  nash"), std::string::npos);
  EXPECT_NE(r.out.find("  s2  nash"), std::string::npos);
  EXPECT_EQ(r.out.find("VIOLATION"), std::string::npos);
  EXPECT_NE(r.out.find("0 violations"), std::string::npos);

  r = run({"verify", "--count", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"verify", "--count", "2", "--sizes", "1"}).code, 2);
}

TEST(Verify, ThousandGames) {
  const Result r = run({"verify", "--count", "1000", "--seed", "42"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("checked 1000 games (seed 42): 0 violations"), std::string::npos) << r.out;
}

TEST(Sweep, StagHunt) {
  const Result r = run({"sweep-staghunt", "--g", "3", "--h", "1:1:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "h,h_over_g,mu_H,mu_G,ranking\n1.000,0.333,0.333,0.667,G > H\n");

  const Result even = run({"sweep-staghunt", "--g", "2", "--h", "1:1:0.5"});
  EXPECT_NE(even.out.find("1.000,0.500,0.500,0.500,G = H"), std::string::npos) << even.out;

  const Result json = run({"sweep-staghunt", "--g", "3", "--h", "0.3:2.7:0.1", "--format", "json", "--precision", "9"});
  ASSERT_EQ(json.code, 0) << json.err;
  const auto doc = nlohmann::json::parse(json.out);
  ASSERT_EQ(doc["rows"].size(), 25u);
  double worst = 0;
  for (const auto& row : doc["rows"]) {
    const double q = row["h"].get<double>() / 3.0;
    worst = std::max({worst, std::abs(row["mu_H"].get<double>() - q), std::abs(row["mu_G"].get<double>() - (1 - q))});
  }
  EXPECT_LE(worst, 1e-4);
}

TEST(Sweep, Errors) {
  EXPECT_EQ(run({"sweep-staghunt", "--g", "3", "--h", "0:1:0.5"}).code, 2);
  EXPECT_EQ(run({"sweep-staghunt", "--g", "3", "--h", "1:3:0.5"}).code, 2);
  EXPECT_EQ(run({"sweep-staghunt", "--g", "3", "--h", "2:1:0.5"}).code, 2);
  EXPECT_EQ(run({"sweep-staghunt", "--g", "3", "--h", "1:2:0"}).code, 2);
  EXPECT_EQ(run({"sweep-staghunt", "--g", "3", "--h", "1-2"}).code, 2);
}

TEST(Curves, FirstExample) {
  Result r = run({"curves", "--game", fixture("table1.json"), "--pair", "1,2", "--points", "21"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "series,eps,s,mu,min_mu_eps,x,membership");
  int curve_rows = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("curve,", 0) == 0) {
      ++curve_rows;
      EXPECT_NE(line.find(",1.000,1.000,"), std::string::npos) << line;
    }
  }
  EXPECT_EQ(curve_rows, 21);
  EXPECT_NE(r.out.find("crossing,1.000,"), std::string::npos);

  r = run({"curves", "--game", fixture("table1.json"), "--pair", "s2,s3", "--format", "json", "--precision", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["crossing"]["eps"].get<double>(), 0.034, 5e-4);
  EXPECT_EQ(doc["memberships"].size(), 4u);
}

TEST(Curves, StagHuntStep) {
  const Result r = run({"curves", "--game", fixture("staghunt.json"), "--pair", "H,G", "--points", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("curve,0.167,1.000,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("curve,0.333,0.500,"), std::string::npos);
  EXPECT_NE(r.out.find("curve,0.500,0.000,"), std::string::npos);
  EXPECT_NE(r.out.find("crossing,0.333,"), std::string::npos);
}

TEST(Curves, Errors) {
  EXPECT_EQ(run({"curves", "--game", fixture("table1.json"), "--pair", "1,1"}).code, 2);
  EXPECT_EQ(run({"curves", "--game", fixture("table1.json"), "--pair", "1,9"}).code, 2);
  EXPECT_EQ(run({"curves", "--game", fixture("table1.json"), "--pair", "12"}).code, 2);
  EXPECT_EQ(run({"curves", "--game", fixture("table1.json"), "--pair", "1,2", "--format", "table"}).code, 2);
}

TEST(Help, ExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
  EXPECT_EQ(run({"sweep-staghunt", "--help"}).code, 0);
}
