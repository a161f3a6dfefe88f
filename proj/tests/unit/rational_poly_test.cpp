#include <gtest/gtest.h>

#include "poly_matchers.hpp"

using namespace yangian;
using yangian::testing::samePoly;

TEST(Rational, ArithmeticAndPrinting) {
  Rational a(1, 2), b(-3, 4);
  EXPECT_EQ((a + b).str(), "-1/4");
  EXPECT_EQ((a * b).str(), "-3/8");
  EXPECT_EQ((a / b).str(), "-2/3");
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_TRUE(Rational(4, 2).isInteger());
  EXPECT_EQ(Rational::parse("-5/10"), Rational(-1, 2));
}

TEST(Rational, LargeValuesStayExact) {
  Rational x(1);
  for (int k = 0; k < 80; ++k) x *= Rational(3);
  Rational y = x / Rational(7);
  EXPECT_EQ(y * Rational(7), x);
  EXPECT_EQ(x.str(), "147808829414345923316083210206383297601");
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(5, 2), Rational(10));
}

TEST(Poly, ParityOfLetters) {
  Algebra alg(1);
  EXPECT_EQ(homogeneousParity(alg.t(1, 2, 1)), 1);
  EXPECT_EQ(homogeneousParity(alg.t(1, 1, 1)), 0);
  ParityParts parts = parityOf(alg.t(1, 2, 1) + alg.t(1, 1, 1));
  EXPECT_TRUE(samePoly(alg, parts.even, alg.t(1, 1, 1)));
  EXPECT_TRUE(samePoly(alg, parts.odd, alg.t(1, 2, 1)));
}

TEST(Poly, FreeProducts) {
  Algebra alg(1);
  Poly a = Rational(2) * alg.t(1, 1, 1);
  Poly b = Rational(3) * alg.t(1, 2, 1);
  Poly ab = multiply(a, b);
  ASSERT_EQ(ab.size(), 1u);
  EXPECT_EQ(ab.terms()[0].coef, Rational(6));
  EXPECT_EQ(ab.terms()[0].word.size(), 2u);
  EXPECT_TRUE(samePoly(alg, multiply(Poly(Rational(1)), b), b));
  Poly sq = multiply(alg.t(1, 2, 1), alg.t(1, 2, 1));
  EXPECT_EQ(sq.terms()[0].word.degree(), 2);
}

TEST(Poly, FreeSuperBrackets) {
  Algebra alg(1);
  Poly x = alg.t(1, 2, 1);
  EXPECT_TRUE(samePoly(alg, superCommutator(x, x), Rational(2) * multiply(x, x)));
  Poly e = alg.t(1, 1, 1), y = alg.t(2, 1, 2);
  EXPECT_TRUE(samePoly(alg, superCommutator(e, y), multiply(e, y) - multiply(y, e)));
  // Both odd: [x, y] - [y, x] = 0.
  EXPECT_TRUE(samePoly(alg, superCommutator(x, y) - superCommutator(y, x), Poly{}));
  EXPECT_TRUE(samePoly(alg, superCommutator(e, y) + superCommutator(y, e), Poly{}));
  EXPECT_TRUE(samePoly(alg, antiCommutator(Poly(Rational(1)), y), Rational(2) * y));
  EXPECT_TRUE(samePoly(alg, antiCommutator(e, e), Rational(2) * multiply(e, e)));
}

TEST(Poly, FormatParseRoundTrip) {
  Algebra alg(2);
  Poly p = Rational(-3, 2) * multiply(alg.t(1, 2, 1), alg.t(3, 1, 2)) + alg.c(1) + Poly(Rational(5));
  EXPECT_TRUE(samePoly(alg, parsePoly(alg.codec(), formatPoly(alg.codec(), p)), p));
}
