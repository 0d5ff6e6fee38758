#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wtspec/cli/dispatch.hpp"
#include "wtspec/codes/reed_solomon.hpp"
#include "wtspec/codes/spectrum.hpp"
#include "wtspec/io/serialize.hpp"

using namespace wtspec;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("wtspec_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, MdsTable) {
  const auto r = run({"mds", "--n", "6", "--k", "3", "--q", "7"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  for (const char* v : {"90", "108", "144"}) EXPECT_NE(r.out.find(v), std::string::npos) << r.out;
  EXPECT_EQ(run({"mds", "--n", "6", "--k", "3", "--p", "7"}).out, r.out);
}

TEST_F(CliTest, MdsJsonWithBounds) {
  const auto r = run({"mds", "--n", "6", "--k", "3", "--q", "7", "--bounds", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lambda"][6], "144");
  EXPECT_EQ(j["bounds"].size(), 3u);
  EXPECT_EQ(j["bounds"][2]["theta"], "24/49");
  EXPECT_EQ(j["bounds"][2]["lower"], "12/49");
}

TEST_F(CliTest, ExtensionFieldViaPAndM) {
  const auto a = run({"mds", "--n", "9", "--k", "5", "--p", "2", "--m", "5", "--format", "csv"});
  const auto b = run({"mds", "--n", "9", "--k", "5", "--q", "32", "--format", "csv"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("9,25214842"), std::string::npos);
}

TEST_F(CliTest, RsRoundTripThroughSpectrum) {
  const auto gen = path("rs.txt");
  ASSERT_EQ(run({"rs", "--n", "8", "--k", "4", "--q", "9", "--out", gen}).code, 0);
  const auto r = run({"spectrum", "--gen", gen, "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ostringstream expected;
  io::write_spectrum_csv(expected, codes::spectrum(codes::reed_solomon(algebra::Field::create(3, 2), 8, 4),
                                                   codes::Strategy::Auto));
  EXPECT_EQ(r.out, expected.str());
  for (const char* s : {"direct", "dual"})
    EXPECT_EQ(run({"spectrum", "--gen", gen, "--format", "csv", "--strategy", s}).out, expected.str());
  const auto j = nlohmann::json::parse(run({"spectrum", "--gen", gen, "--format", "json"}).out);
  EXPECT_EQ(j["mds"], true);
  EXPECT_EQ(j["dmin"], 5);
}

TEST_F(CliTest, ExpectedReportsThresholds) {
  const auto r = run({"expected", "--n", "9", "--k", "5", "--q", "32", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["theorem_bound"]["raw"], "-55/9");
  EXPECT_EQ(j["thresholds"]["a1_vacuous"], true);
  EXPECT_EQ(j["regime"]["interval_empty"], true);
}

TEST_F(CliTest, FullRank) {
  const auto r = run({"fullrank", "--n", "4", "--k", "2", "--q", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["probability"], "105/128");
  const auto p = run({"fullrank", "--n", "4", "--k", "2", "--q", "2", "--variant", "truncated", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(p.out)["probability"], "7/8");
  // Randomized subcommands never default the seed.
  EXPECT_EQ(run({"fullrank", "--n", "4", "--k", "2", "--q", "2", "--montecarlo", "10"}).code, cli::kExitUsage);
  const auto mc = run({"fullrank", "--n", "4", "--k", "2", "--q", "5", "--montecarlo", "500", "--seed", "3",
                       "--format", "json"});
  ASSERT_EQ(mc.code, 0);
  EXPECT_EQ(nlohmann::json::parse(mc.out)["montecarlo"]["samples"], "500");
}

TEST_F(CliTest, EnsembleSummaryIsByteStableAcrossJobs) {
  const std::vector<std::string> base{"ensemble", "--n", "6", "--k", "3", "--p", "2", "--m", "3",
                                      "--samples", "120", "--seed", "42"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return a;
  };
  ASSERT_EQ(run(with({"--jobs", "1", "--summary", path("a.json"), "--records", path("a.csv")})).code, 0);
  ASSERT_EQ(run(with({"--jobs", "3", "--summary", path("b.json"), "--records", path("b.csv")})).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("a.csv")).substr(0, 40), "idx,seed,rank,full_rank,a1,a2,dmin,N_1,N");
  const auto j = nlohmann::json::parse(slurp(path("a.json")));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_FALSE(j.contains("stamp"));

  ASSERT_EQ(run(with({"--stamp", "--summary", path("c.json")})).code, 0);
  EXPECT_TRUE(nlohmann::json::parse(slurp(path("c.json"))).contains("stamp"));
  EXPECT_EQ(run(with({"--assert"})).code, 0);
}

TEST_F(CliTest, EnsembleJsonToStdout) {
  const auto r = run({"ensemble", "--n", "5", "--k", "2", "--q", "5", "--samples", "10", "--seed", "1", "--weights",
                      "4,5", "--format", "json", "--no-concentration"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["weights"].size(), 2u);
  EXPECT_EQ(j["config"]["checks"]["concentration"], false);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"mds", "--n", "6"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"mds", "--n", "6", "--k", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"mds", "--n", "6", "--k", "3", "--q", "7", "--p", "7"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"mds", "--n", "6", "--k", "3", "--q", "7", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"ensemble", "--n", "6", "--k", "3", "--q", "7", "--samples", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "oracle"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"mds", "--n", "6", "--k", "3", "--q", "6"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"mds", "--n", "6", "--k", "3", "--q", "5"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"ensemble", "--n", "30", "--k", "15", "--q", "32", "--samples", "1", "--seed", "0"}).code,
            cli::kExitDomain);
  EXPECT_EQ(run({"spectrum", "--gen", path("missing.txt")}).code, cli::kExitUsage);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  for (const char* sub : {"spectrum", "mds", "expected", "rs", "ensemble", "fullrank", "verify"})
    EXPECT_NE(help.out.find(sub), std::string::npos);
  const auto sub_help = run({"ensemble", "--help"});
  EXPECT_EQ(sub_help.code, 0);
  for (const char* flag : {"--samples", "--seed", "--jobs", "--summary", "--records", "--assert", "--stamp"})
    EXPECT_NE(sub_help.out.find(flag), std::string::npos) << flag;
}

TEST_F(CliTest, MalformedGeneratorIsDomainError) {
  std::ofstream(path("bad.txt")) << "2 1 5 1\n0 1\n1 7\n";
  EXPECT_EQ(run({"spectrum", "--gen", path("bad.txt")}).code, cli::kExitDomain);
}

TEST_F(CliTest, VerifySuites) {
  EXPECT_EQ(run({"verify", "--suite", "bounds", "--nmax", "7", "--qmax", "16"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "mds"}).code, 0);
  const auto o = run({"verify", "--suite", "oracle", "--seed", "9", "--count", "20", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(nlohmann::json::parse(o.out)["suites"][0]["mismatches"], 0);
  EXPECT_EQ(run({"verify", "--suite", "independence"}).code, 0);
}

TEST_F(CliTest, InstalledBinaryExitStatus) {
  const std::string bin = WTSPEC_CLI_PATH;
  const std::string sink = " > " + path("stdout.txt") + " 2> " + path("stderr.txt");
  auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + sink).c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("mds --n 6 --k 3 --q 7"), 0);
  EXPECT_NE(slurp(path("stdout.txt")).find("144"), std::string::npos);
  EXPECT_EQ(status("mds --n 6 --k 3 --q 5"), 2);
  EXPECT_EQ(status("--bogus"), 64);
}
