#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "poly_matchers.hpp"

using namespace yangian;
using yangian::testing::isZeroPoly;
using yangian::testing::samePoly;

TEST(IndexData, Conventions) {
  IndexData id(2);
  EXPECT_EQ(id.N(), 5);
  EXPECT_EQ(id.prime(1), 5);
  EXPECT_EQ(id.prime(3), 3);
  EXPECT_EQ(id.bar(3), 0);
  EXPECT_EQ(id.bar(4), 1);
  EXPECT_EQ(id.theta(3), 1);
  EXPECT_EQ(id.theta(4), -1);
  EXPECT_EQ(id.kappa(), Rational(-5, 2));
  EXPECT_TRUE(id.allowed(1, 5));
  EXPECT_FALSE(id.allowed(2, 5));
  EXPECT_TRUE(id.allowed(3, 2));
  EXPECT_FALSE(id.allowed(3, 3));
}

TEST(CommutatorTable, LowEntries) {
  Algebra m1(1);
  EXPECT_TRUE(samePoly(m1, m1.commutatorTable(1, 1, 1, 2, 1, 1), -m1.t(1, 2, 1)));
  Algebra m2(2);
  for (int s = 1; s <= 3; ++s) {
    EXPECT_TRUE(samePoly(m2, m2.commutatorTable(1, 2, 1, 1, 1, s), m2.tNormal(1, 2, s))) << "s=" << s;
  }
  for (int m = 1; m <= 3; ++m) {
    Algebra alg(m);
    for (int r = 1; r <= 3; ++r)
      for (int s = 1; s <= 3; ++s) EXPECT_TRUE(isZeroPoly(alg, alg.commutatorTable(1, 1, 1, 1, r, s)));
  }
}

TEST(CommutatorTable, GenerationIsConsistent) {
  for (int m = 1; m <= 2; ++m) {
    Algebra alg(m);
    alg.prepare(m == 1 ? 6 : 4);
    EXPECT_GT(alg.consistencyChecks(), 0u);
    EXPECT_EQ(alg.consistencyFailures(), 0u);
  }
}

TEST(Elimination, ForbiddenLettersAtOrderOne) {
  Algebra alg(1);
  EXPECT_TRUE(samePoly(alg, alg.eliminateForbidden(Letter::t(2, 2, 1)), Rational(1, 2) * alg.c(1)));
  EXPECT_TRUE(samePoly(alg, alg.eliminateForbidden(Letter::t(3, 3, 1)), alg.c(1) - alg.t(1, 1, 1)));
  for (int r = 1; r <= 4; ++r) {
    Poly p = alg.eliminateForbidden(Letter::t(3, 2, r));
    EXPECT_LE(p.maxDegree(), r);
    EXPECT_EQ(homogeneousParity(p), 1);
  }
}

TEST(Normalize, SwapsUseTheTable) {
  Algebra alg(1);
  Poly t11 = alg.t(1, 1, 1), t12 = alg.t(1, 2, 1);
  EXPECT_TRUE(samePoly(alg, alg.normalize(multiply(t11, t12)), multiply(t11, t12)));
  EXPECT_TRUE(samePoly(alg, alg.normalize(multiply(t12, t11)), multiply(t11, t12) + t12));
  Poly p = multiply(alg.t(3, 1, 2), t12) + Rational(3) * alg.t(2, 2, 1);
  EXPECT_TRUE(isZeroPoly(alg, alg.normalize(p - p)));
  EXPECT_TRUE(alg.isZero(Poly{}));
  EXPECT_TRUE(alg.isZero(superCommutator(alg.t(1, 1, 2), alg.t(1, 1, 3))));
  EXPECT_FALSE(alg.isZero(t12));
}

TEST(Normalize, OddSquareHasLowerDegreeForm) {
  Algebra alg(1);
  // t_12^(1) t_12^(1) = [t_12^(1), t_12^(1)] / 2.
  Poly sq = alg.normalize(multiply(alg.t(1, 2, 1), alg.t(1, 2, 1)));
  EXPECT_TRUE(samePoly(alg, sq, Rational(1, 2) * alg.commutatorTable(1, 2, 1, 2, 1, 1)));
}

TEST(Normalize, StrategiesAgree) {
  Algebra alg(2);
  Word w;
  w.push(alg.codec().t(4, 1, 1));
  w.push(alg.codec().t(3, 2, 1));
  w.push(alg.codec().t(1, 3, 2));
  w.push(alg.codec().t(2, 1, 1));
  Poly p = Poly::word(2, w);
  Poly fast = alg.normalize(p, Strategy::Fast);
  EXPECT_TRUE(samePoly(alg, alg.normalize(p, Strategy::LeftmostFirst), fast));
  EXPECT_TRUE(samePoly(alg, alg.normalize(p, Strategy::RightmostFirst), fast));
}

TEST(Pbw, NormalWordCounts) {
  // Coefficients of prod_r (1 + q^r)^{2m} (1 - q^r)^{-(2m^2 + m + 1)}.
  const std::vector<std::vector<int>> series = {{1, 6, 25, 86, 260}, {1, 15, 131, 860}};
  for (int m = 1; m <= 2; ++m) {
    Algebra alg(m);
    for (int d = 0; d < static_cast<int>(series[m - 1].size()); ++d) {
      EXPECT_EQ(alg.enumerateNormalWords(d).size(), static_cast<std::size_t>(series[m - 1][d])) << m << " " << d;
      EXPECT_EQ(pbwSeriesCount(m, d), series[m - 1][d]);
    }
  }
  Algebra alg(1);
  auto words = alg.enumerateNormalWords(1);
  std::vector<std::string> names;
  for (const auto& w : words) names.push_back(alg.codec().format(w[0]));
  EXPECT_EQ(names, (std::vector<std::string>{"c[1]", "t[1,1,1]", "t[1,2,1]", "t[1,3,1]", "t[2,1,1]", "t[3,1,1]"}));
}

TEST(Cache, RoundTripAndDeterminism) {
  const auto dir = std::filesystem::temp_directory_path() / "yangian_cache_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "table.cache").string();
  std::filesystem::remove(path);
  std::size_t entries = 0;
  {
    Algebra alg(1);
    alg.prepare(4);
    entries = alg.tableEntryCount();
    alg.saveCache(path);
  }
  auto slurp = [&] {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  const std::string first = slurp();
  {
    Algebra warm(1);
    EXPECT_EQ(warm.loadCache(path), entries);
    EXPECT_TRUE(samePoly(warm, warm.commutatorTable(1, 1, 1, 2, 1, 1), -warm.t(1, 2, 1)));
    warm.prepare(4);
    warm.saveCache(path);
  }
  EXPECT_EQ(slurp(), first);
  Algebra mutated(1, AlgebraOptions{true, TableKey{1, 1, 1, 2, 1, 1}});
  EXPECT_EQ(mutated.loadCache(path), 0u);
  EXPECT_THROW(mutated.saveCache(path), std::logic_error);
  std::filesystem::remove_all(dir);
}
