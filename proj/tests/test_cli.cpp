#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cyclemod/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cyclemod::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> d_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> out;
  while (std::getline(in, line)) out.push_back(line.substr(line.rfind(',') + 1));
  return out;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CliGen, Csv) {
  const auto r = run({"gen", "--p", "2", "--k-end", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 10), "k,a_k,d_k\n");
  EXPECT_EQ(d_column(r.out), (std::vector<std::string>{"8", "4", "2", "1", "5", "7"}));
}

TEST(CliGen, Json) {
  const auto r = run({"gen", "--p", "2", "--k-end", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 6u);
  EXPECT_EQ(j[0]["k"], 1);
  EXPECT_EQ(j[0]["a_k"], 1);
  EXPECT_EQ(j[0]["d_k"], 8);
  EXPECT_EQ(j[5]["d_k"], 7);
}

TEST(CliGen, DefaultRangeIsOnePeriod) {
  const auto r = run({"gen", "--p", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(d_column(r.out).size(), 18u);
}

TEST(CliGen, UsageErrors) {
  EXPECT_EQ(run({"gen", "--p", "0"}).code, 2);
  EXPECT_EQ(run({"gen", "--p", "81"}).code, 2);
  EXPECT_EQ(run({"gen"}).code, 2);
  EXPECT_EQ(run({"gen", "--p", "2", "--k-start", "5", "--k-end", "4"}).code, 2);
  EXPECT_EQ(run({"gen", "--p", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliGen, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(CliEcs, FullPeriodAdmitted) {
  const auto r = run({"ecs", "--p", "2", "--k-end", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["ecs"].get<double>(), 1.0);
  EXPECT_EQ(j["admitted"], true);
  EXPECT_EQ(j["buckets"], 9);
  EXPECT_DOUBLE_EQ(j["threshold"].get<double>(), 0.9);
  for (const char* key : {"p", "k_start", "k_end", "buckets", "cd", "rud", "mbi", "ecs", "admitted", "threshold"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_NE(r.out.find("\"ecs\": 1.000000"), std::string::npos);
}

TEST(CliEcs, RejectedExitsThree) {
  const auto r = run({"ecs", "--p", "1", "--k-end", "1", "--threshold", "0.99"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.out)["admitted"], false);
}

TEST(CliEcs, FullTraversalAtP5) {
  const auto r = run({"ecs", "--p", "5", "--k-end", "162"});
  ASSERT_EQ(r.code, 0);
  EXPECT_DOUBLE_EQ(json::parse(r.out)["cd"].get<double>(), 1.0);
}

TEST(CliEcs, ThresholdFromEnvironment) {
  ::setenv(cyclemod::cli::kThresholdEnv, "0.3", 1);
  auto r = run({"ecs", "--p", "1", "--k-end", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_DOUBLE_EQ(json::parse(r.out)["threshold"].get<double>(), 0.3);
  // Flag wins over the environment.
  r = run({"ecs", "--p", "1", "--k-end", "1", "--threshold", "0.5"});
  EXPECT_EQ(r.code, 3);
  ::setenv(cyclemod::cli::kThresholdEnv, "bogus", 1);
  EXPECT_EQ(run({"ecs", "--p", "1", "--k-end", "1"}).code, 2);
  ::unsetenv(cyclemod::cli::kThresholdEnv);
}

TEST(CliEcs, BadBuckets) { EXPECT_EQ(run({"ecs", "--p", "2", "--buckets", "1"}).code, 2); }

TEST(CliDecompose, TableOne) {
  struct Row {
    const char* p;
    const char* s;
    int A, k, n, d;
  };
  for (const Row& row : {Row{"2", "0", 8, 4, 0, 1}, Row{"3", "1", 53, 1, 0, 53}, Row{"3", "2", 80, 5, 0, 5},
                         Row{"5", "0", 242, 2, 0, 121}}) {
    const auto r = run({"decompose", "--p", row.p, "--s", row.s});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["A"], row.A);
    EXPECT_EQ(j["k"], row.k);
    EXPECT_EQ(j["n"], row.n);
    EXPECT_EQ(j["d"], row.d);
    EXPECT_EQ(j["verified"], true);
  }
  EXPECT_EQ(run({"decompose", "--p", "3", "--s", "-1"}).code, 2);
  EXPECT_EQ(run({"decompose", "--p", "80", "--s", "18446744073709551615"}).code, 2);
}

TEST(CliPlot, Deterministic) {
  const auto a = run({"plot", "--p", "5", "--k-end", "165"});
  const auto b = run({"plot", "--p", "5", "--k-end", "165"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("viewBox=\"0 0 800 400\""), std::string::npos);
  EXPECT_NE(a.out.find(">242</text>"), std::string::npos);
  EXPECT_NE(a.out.find(">0</text>"), std::string::npos);
  EXPECT_NE(a.out.find("d_k mod 3^5"), std::string::npos);
}

TEST(CliPlot, TwoLevelPatternAtP1) {
  const auto r = run({"plot", "--p", "1", "--k-end", "61"});
  ASSERT_EQ(r.code, 0);
  std::set<std::string> ys;
  std::size_t pos = 0, circles = 0;
  while ((pos = r.out.find("cy=\"", pos)) != std::string::npos) {
    pos += 4;
    ys.insert(r.out.substr(pos, r.out.find('"', pos) - pos));
    ++circles;
  }
  EXPECT_EQ(circles, 61u);
  EXPECT_EQ(ys.size(), 2u);
}

TEST(CliPlot, SpanLimit) { EXPECT_EQ(run({"plot", "--p", "12", "--k-end", "100002"}).code, 2); }

TEST(CliPlot, WritesFileAndReportsWriteFailure) {
  const auto path = fs::temp_directory_path() / "cyclemod_cli_plot.svg";
  ASSERT_EQ(run({"plot", "--p", "2", "--k-end", "6", "-o", path.string()}).code, 0);
  EXPECT_EQ(slurp(path), run({"plot", "--p", "2", "--k-end", "6"}).out);
  fs::remove(path);
  EXPECT_EQ(run({"plot", "--p", "2", "-o", "/nonexistent-dir/x.svg"}).code, 1);
}

TEST(CliMask, ExplicitToken) {
  EXPECT_EQ(run({"mask", "--p", "3", "--k", "5", "--r-hex", "00"}).out, "05\n");
  EXPECT_EQ(run({"mask", "--p", "3", "--k", "5", "--r-hex", "13"}).out, "16\n");
  EXPECT_EQ(run({"mask", "--p", "3", "--k", "5", "--r-hex", "13", "--method", "kdf"}).out, "0b3\n");
}

TEST(CliMask, TestSourceIsReproducible) {
  const auto a = run({"mask", "--p", "3", "--k", "5", "--source", "test", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run({"mask", "--p", "3", "--k", "5", "--source", "test", "--seed", "7"}).out);
  EXPECT_EQ(a.out.size(), 3u);
}

TEST(CliMask, UsageErrors) {
  EXPECT_EQ(run({"mask", "--p", "3", "--k", "5", "--r-hex", "20"}).code, 2);
  EXPECT_EQ(run({"mask", "--p", "3", "--k", "5", "--r-hex", "0", "--r-width", "4"}).code, 2);
  EXPECT_EQ(run({"mask", "--p", "3", "--k", "5", "--r-hex", "zz"}).code, 2);
  EXPECT_EQ(run({"mask", "--p", "3", "--k", "5"}).code, 2);
  EXPECT_EQ(run({"mask", "--p", "3", "--k", "5", "--r-hex", "1", "--source", "test"}).code, 2);
}

TEST(CliBench, Structure) {
  const auto r = run({"bench", "--p", "5", "--reps", "30"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["variants"].size(), 2u);
  const auto& euclid = j["variants"][0];
  const auto& ct = j["variants"][1];
  EXPECT_EQ(euclid["variant"], "euclid");
  EXPECT_EQ(ct["variant"], "ct");
  EXPECT_EQ(ct["iter_min"], ct["iter_max"]);
  EXPECT_LT(euclid["iter_min"].get<int>(), euclid["iter_max"].get<int>());
  for (const char* key : {"variant", "p", "k_start", "k_end", "reps", "mean_ns", "max_jitter_ns", "cv", "iter_min",
                          "iter_max"}) {
    EXPECT_TRUE(ct.contains(key)) << key;
  }
  EXPECT_EQ(ct["k_end"], 100);
  EXPECT_EQ(run({"bench", "--p", "5", "--reps", "10"}).code, 2);
}

#ifdef CYCLEMOD_BIN
TEST(CliBinary, ExitCodes) {
  const std::string bin = CYCLEMOD_BIN;
  const auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("gen --p 2 --k-end 6"), 0);
  EXPECT_EQ(status("gen --p 0"), 2);
  EXPECT_EQ(status("ecs --p 1 --k-end 1 --threshold 0.99"), 3);
  EXPECT_EQ(status("plot --p 2 -o /nonexistent-dir/x.svg"), 1);
}
#endif
