#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "yangian_cli/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome runCli(std::vector<std::string> args) {
  args.insert(args.begin(), "yangian");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = yangian::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, VerifyPassesAndWritesJson) {
  auto r = runCli({"verify", "--m", "1", "--order", "4", "--suite", "thm-odp", "--format", "json", "--jobs", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["suite"], "thm-odp");
  EXPECT_EQ(doc["totals"]["failed"], 0);
}

TEST(Cli, UnknownSuiteListsValidIds) {
  auto r = runCli({"verify", "--suite", "nosuch"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("thm-odp"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(runCli({"verify", "--m", "4"}).code, 2);
  EXPECT_EQ(runCli({"verify", "--order", "0"}).code, 2);
  EXPECT_EQ(runCli({"verify", "--format", "xml"}).code, 2);
  EXPECT_EQ(runCli({"verify", "--bogus"}).code, 2);
  EXPECT_EQ(runCli({"verify", "--m", "2", "--suite", "thm-odp"}).code, 2);
  EXPECT_EQ(runCli({}).code, 2);
}

TEST(Cli, NegativeControlExitsOne) {
  auto r = runCli({"verify", "--m", "1", "--order", "4", "--suite", "negative-control", "--jobs", "1"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, StableOutputIsReproducible) {
  const std::string dir = ::testing::TempDir();
  const std::string a = dir + "yangian_report_a.txt", b = dir + "yangian_report_b.txt";
  for (const auto& path : {a, b}) {
    auto r = runCli({"verify", "--m", "1", "--order", "3", "--suite", "cor-serre", "--format", "text",
                     "--stable-output", "--out", path, "--seed", "7"});
    EXPECT_EQ(r.code, 0);
  }
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a).find("PASS"), std::string::npos);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST(Cli, TableIsIdempotent) {
  const std::string path = ::testing::TempDir() + "yangian_cli_table.cache";
  std::remove(path.c_str());
  auto first = runCli({"table", "--m", "1", "--max-super", "2", "--cache", path});
  EXPECT_EQ(first.code, 0) << first.err;
  const std::string bytes = slurp(path);
  EXPECT_NE(bytes.find("1;1,1,1,2;1,1;-1 t[1,2,1]"), std::string::npos) << bytes;
  EXPECT_EQ(runCli({"table", "--m", "1", "--max-super", "2", "--cache", path}).code, 0);
  EXPECT_EQ(slurp(path), bytes);
  auto m2 = runCli({"table", "--m", "2", "--max-super", "2", "--cache", path});
  EXPECT_EQ(m2.code, 0);
  EXPECT_NE(slurp(path).find("2;1,2,1,1;1,1;1 t[1,2,1]"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, TableRejectsUnwritablePath) {
  auto r = runCli({"table", "--m", "1", "--max-super", "2", "--cache", "/nonexistent-dir/x/table.cache"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, PbwRows) {
  auto r = runCli({"pbw", "--m", "1", "--dmax", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(1, 6, 6)"), std::string::npos);
  EXPECT_NE(r.out.find("(2, 25, 25)"), std::string::npos);
  auto zero = runCli({"pbw", "--m", "1", "--dmax", "0"});
  EXPECT_NE(zero.out.find("(0, 1, 1)"), std::string::npos);
  EXPECT_EQ(runCli({"pbw", "--m", "1", "--dmax", "2", "--drop-central"}).code, 1);
  EXPECT_EQ(runCli({"pbw", "--m", "2", "--dmax", "4"}).code, 2);
}
