#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "yangian/report.hpp"
#include "yangian/suites.hpp"

using namespace yangian;

namespace {

RunOptions serial() {
  RunOptions o;
  o.jobs = 1;
  return o;
}

}  // namespace

TEST(Catalog, IdsAndRanges) {
  EXPECT_NE(findSuite("thm-odp"), nullptr);
  EXPECT_EQ(findSuite("nosuch"), nullptr);
  EXPECT_TRUE(findSuite("negative-control")->negative);
  EXPECT_NE(suiteIdList().find("cor-modpy"), std::string::npos);
  EXPECT_THROW(runSuite("nosuch", 1, 2), std::invalid_argument);
  EXPECT_THROW(runSuite("thm-odp", 2, 2), std::invalid_argument);
  EXPECT_THROW(runSuite("thm-odp", 1, 9), std::invalid_argument);
  EXPECT_THROW(runSuite("thm-odp", 4, 2), std::invalid_argument);
}

TEST(Suites, OddRankRelationsHoldAtOrderFour) {
  Report r = runSuite("thm-odp", 1, 4, serial());
  EXPECT_TRUE(r.allPass());
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.pass) << c.id << " " << c.indices << ": " << c.detail;
    EXPECT_GT(c.coefficients, 0u);
  }
}

TEST(Suites, ParallelRunMatchesSerialRun) {
  RunOptions par = serial();
  par.jobs = 4;
  Report a = runSuite("gauss-core", 2, 2, serial());
  Report b = runSuite("gauss-core", 2, 2, par);
  ReportStyle stable{ReportFormat::Json, true};
  EXPECT_EQ(formatReport(a, stable), formatReport(b, stable));
}

TEST(Suites, FlippedTableEntryFails) {
  Report r = runSuite("negative-control", 1, 3, serial());
  EXPECT_FALSE(r.allPass());
  for (const auto& c : r.checks) {
    EXPECT_FALSE(c.pass) << c.id;
    EXPECT_GT(c.residualTerms, 0u) << c.id;
  }
}

// Adding 1 to any single constant of a relation must leave a residue. Some
// constants only reach the fourth coefficient, hence order 4.
TEST(Suites, EveryPerturbedConstantIsDetected) {
  for (const char* id : {"thm-odp", "cor-odpy", "cor-serre"}) {
    Report base = runSuite(id, 1, 4, serial());
    ASSERT_TRUE(base.allPass()) << id;
    for (std::size_t pos = 0; pos < base.checks.size(); ++pos) {
      for (int k = 0; k < base.checks[pos].constants; ++k) {
        RunOptions o = serial();
        o.only = pos;
        o.perturb = k;
        Report r = runSuite(id, 1, 4, o);
        ASSERT_EQ(r.checks.size(), 1u);
        EXPECT_FALSE(r.checks[0].pass) << id << " " << r.checks[0].id << " constant " << k;
      }
    }
  }
}

TEST(Suites, EveryPerturbedConstantIsDetectedRankTwo) {
  for (const char* id : {"ospl4", "thm-dp", "cor-modpy", "derived-ladders", "gauss-core"}) {
    Report base = runSuite(id, 2, 4, serial());
    ASSERT_TRUE(base.allPass()) << id;
    for (std::size_t pos = 0; pos < base.checks.size(); ++pos) {
      for (int k = 0; k < base.checks[pos].constants; ++k) {
        RunOptions o = serial();
        o.only = pos;
        o.perturb = k;
        Report r = runSuite(id, 2, 4, o);
        EXPECT_FALSE(r.checks[0].pass) << id << " " << r.checks[0].id << " [" << r.checks[0].indices
                                       << "] constant " << k;
      }
    }
  }
}

TEST(Pbw, CountsMatchTheSeries) {
  auto rows = pbwTable(1, 2);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].count, 1u);
  EXPECT_EQ(rows[1].count, 6u);
  EXPECT_EQ(rows[2].count, 25u);
  for (const auto& row : rows) EXPECT_TRUE(row.match);
  PbwOptions broken;
  broken.dropCentral = true;
  EXPECT_FALSE(pbwTable(1, 1, broken)[1].match);
}

TEST(Pbw, GaussianMonomialsAreIndependent) {
  auto rows = gaussianIndependence(2);
  const std::vector<std::size_t> want = {1, 6, 25};
  for (int d = 0; d <= 2; ++d) {
    EXPECT_EQ(rows[d].monomials, want[d]);
    EXPECT_EQ(rows[d].rank, want[d]);
  }
}

TEST(Report, JsonShape) {
  Report r = runSuite("emb-osp", 1, 1, serial());
  auto doc = nlohmann::json::parse(formatReport(r, {ReportFormat::Json, true}));
  EXPECT_EQ(doc["suite"], "emb-osp");
  EXPECT_EQ(doc["m"], 1);
  EXPECT_EQ(doc["order"], 1);
  ASSERT_FALSE(doc["checks"].empty());
  const auto& c = doc["checks"][0];
  for (const char* key : {"id", "indices", "status", "residual_terms"}) EXPECT_TRUE(c.contains(key)) << key;
  EXPECT_FALSE(c.contains("millis"));
  EXPECT_EQ(doc["totals"]["failed"], 0);
  auto timed = nlohmann::json::parse(formatReport(r, {ReportFormat::Json, false}));
  EXPECT_TRUE(timed["checks"][0].contains("millis"));
}

TEST(Report, CacheDoesNotChangeOutcomes) {
  const std::string path = ::testing::TempDir() + "yangian_suite_cache.txt";
  std::remove(path.c_str());
  RunOptions o = serial();
  o.cachePath = path;
  ReportStyle stable{ReportFormat::Json, true};
  const std::string cold = formatReport(runSuite("cor-odpy", 1, 3, o), stable);
  const std::string warm = formatReport(runSuite("cor-odpy", 1, 3, o), stable);
  EXPECT_EQ(cold, warm);
  EXPECT_EQ(cold, formatReport(runSuite("cor-odpy", 1, 3, serial()), stable));
  std::remove(path.c_str());
}
