#include <gtest/gtest.h>

#include "poly_matchers.hpp"
#include "yangian/gauss.hpp"

using namespace yangian;
using yangian::testing::isZeroPoly;
using yangian::testing::samePoly;

namespace {

PSeries letterSeries(const Algebra& alg, int i, int j, int order) {
  PSeries s(order);
  for (int r = 1; r <= order; ++r) s.at(r) = alg.tNormal(i, j, r);
  return s;
}

}  // namespace

TEST(Series, ShiftExpansion) {
  Algebra alg(1);
  PSeries e = letterSeries(alg, 1, 2, 4);
  PSeries s = shift(e, Rational(-1, 2));
  EXPECT_TRUE(samePoly(alg, s[1], e[1]));
  EXPECT_TRUE(samePoly(alg, s[2], e[2] + Rational(1, 2) * e[1]));
  EXPECT_TRUE(samePoly(alg, s[3], e[3] + e[2] + Rational(1, 4) * e[1]));
  PSeries twice = shift(shift(e, Rational(1, 3)), Rational(2, 3));
  PSeries once = shift(e, Rational(1));
  for (int r = 0; r <= 4; ++r) EXPECT_TRUE(samePoly(alg, twice[r], once[r]));
}

TEST(Series, Inversion) {
  Algebra alg(1);
  NormalRing ring{&alg};
  PSeries h(4);
  h.at(0) = Poly(Rational(1));
  h.at(1) = alg.t(1, 1, 1);
  PSeries inv = invert(ring, h);
  EXPECT_TRUE(samePoly(alg, inv[1], -alg.t(1, 1, 1)));
  EXPECT_TRUE(samePoly(alg, inv[2], alg.mul(alg.t(1, 1, 1), alg.t(1, 1, 1))));
  PSeries t11 = letterSeries(alg, 1, 1, 4);
  t11.at(0) = Poly(Rational(1));
  PSeries one = mul(ring, t11, invert(ring, t11));
  EXPECT_TRUE(samePoly(alg, one[0], Poly(Rational(1))));
  for (int r = 1; r <= 4; ++r) EXPECT_TRUE(isZeroPoly(alg, one[r]));
}

TEST(Series, StrictTail) {
  Algebra alg(1);
  PSeries e = letterSeries(alg, 1, 2, 3);
  PSeries tail = strictTail(e);
  EXPECT_TRUE(isZeroPoly(alg, tail[1]));
  EXPECT_TRUE(samePoly(alg, tail[2], e[2]));
  EXPECT_TRUE(isZeroPoly(alg, strictTail(constantSeries(Poly(Rational(3)), 3))[0]));
}

TEST(BiSeries, DifferenceQuotient) {
  Algebra alg(1);
  PSeries g = letterSeries(alg, 1, 1, 4);
  auto dq = diffQuotient(g, Rational(0), Rational(0));
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; x + y <= 5; ++y) EXPECT_TRUE(samePoly(alg, dq.at(x, y), -g[x + y - 1]));
  auto shifted = diffQuotient(g, Rational(1, 2), Rational(0));
  EXPECT_TRUE(samePoly(alg, shifted.at(1, 1), -g[1]));
  auto flat = diffQuotient(constantSeries(Poly(Rational(2)), 4), Rational(0), Rational(0));
  EXPECT_TRUE(flat.coefficients().empty());
  // (u - v) (g(u) - g(v)) / (u - v) = g(u) - g(v).
  auto back = uMultiply(dq, {{1, 0, Rational(1)}, {0, 1, Rational(-1)}});
  for (int x = 1; x <= 3; ++x) {
    EXPECT_TRUE(samePoly(alg, back.at(x, 0), g[x]));
    EXPECT_TRUE(samePoly(alg, back.at(0, x), -g[x]));
    for (int y = 1; x + y <= 4; ++y) EXPECT_TRUE(isZeroPoly(alg, back.at(x, y)));
  }
}

TEST(BiSeries, OuterProductAndCommutator) {
  Algebra alg(1);
  NormalRing ring{&alg};
  PSeries e = letterSeries(alg, 1, 2, 3), f = letterSeries(alg, 2, 1, 3);
  auto outer = outerProduct(FreeRing{1}, e, f);
  EXPECT_TRUE(samePoly(alg, outer.at(1, 1), multiply(e[1], f[1])));
  auto br = biCommutator(ring, fromU(e), fromV(f));
  EXPECT_TRUE(samePoly(alg, br.at(1, 1), alg.bracket(e[1], f[1])));
}

TEST(Matrix, SuperTranspose) {
  Algebra alg(1);
  PMatrix T = tMatrix(alg, 3, false);
  PMatrix Tt = superTranspose(alg.index(), T);
  EXPECT_TRUE(samePoly(alg, Tt(1, 1)[2], T(3, 3)[2]));
  EXPECT_EQ(Tt.order(), T.order());
  PMatrix four = superTranspose(alg.index(), superTranspose(alg.index(), superTranspose(alg.index(), Tt)));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int r = 0; r <= 3; ++r) EXPECT_TRUE(samePoly(alg, four(i, j)[r], T(i, j)[r]));
}

TEST(Gauss, LowCoefficients) {
  for (int m = 1; m <= 2; ++m) {
    Algebra alg(m);
    NormalRing ring{&alg};
    GaussData g = gaussDecompose(ring, tMatrix(alg, 3, true));
    for (int r = 1; r <= 3; ++r) EXPECT_TRUE(samePoly(alg, g.h(1)[r], alg.tNormal(1, 1, r)));
    EXPECT_TRUE(samePoly(alg, g.e(1, 2)[1], alg.t(1, 2, 1)));
    EXPECT_TRUE(samePoly(alg, g.e(1, 2)[2], alg.t(1, 2, 2) - alg.mul(alg.t(1, 1, 1), alg.t(1, 2, 1))));
    EXPECT_TRUE(samePoly(alg, g.hinv(1)[1], -alg.t(1, 1, 1)));
  }
}

TEST(Gauss, QuasideterminantAgreesWithDecomposition) {
  Algebra alg(1);
  NormalRing ring{&alg};
  PMatrix T = tMatrix(alg, 3, true);
  GaussData g = gaussDecompose(ring, T);
  PSeries q = quasideterminant(ring, submatrix(T, {1, 2}, {1, 2}), 2, 2);
  for (int r = 0; r <= 3; ++r) EXPECT_TRUE(samePoly(alg, q[r], g.h(2)[r]));
  PMatrix one(2, 3);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) one.at(i, j) = constantSeries(Poly(Rational(i == j ? 1 : 0)), 3);
  PSeries q1 = quasideterminant(ring, one, 2, 2);
  EXPECT_TRUE(samePoly(alg, q1[0], Poly(Rational(1))));
  EXPECT_TRUE(isZeroPoly(alg, q1[1]));
}

TEST(Gauss, CentralSeries) {
  Algebra alg(1);
  NormalRing ring{&alg};
  GaussData g = gaussDecompose(ring, tMatrix(alg, 3, true));
  PSeries c = cLetterSeries(alg, 3);
  EXPECT_TRUE(samePoly(alg, c[1], g.h(1)[1] + g.h(3)[1]));
  PSeries viaProduct = cSeriesProduct(ring, g);
  for (int r = 0; r <= 3; ++r) EXPECT_TRUE(samePoly(alg, viaProduct[r], c[r]));
  PSeries z = zSeries(ring, c);
  EXPECT_TRUE(samePoly(alg, z[1], Rational(1, 2) * alg.c(1)));
  PSeries h2 = mul(ring, mul(ring, z, shift(g.h(1), Rational(-1, 2))), invert(ring, shift(g.h(1), Rational(-1))));
  for (int r = 0; r <= 3; ++r) EXPECT_TRUE(samePoly(alg, h2[r], g.h(2)[r]));
}

TEST(Gauss, XiLeadingTerms) {
  Algebra alg(2);
  NormalRing ring{&alg};
  GaussData g = gaussDecompose(ring, tMatrix(alg, 3, true));
  std::vector<PSeries> k;
  for (int i = 1; i <= 2; ++i) k.push_back(mul(ring, g.hinv(i), g.h(i + 1)));
  XiData xi = xiSeries(g, k);
  for (int r = 1; r <= 3; ++r) EXPECT_TRUE(samePoly(alg, xi.xiMinus[1][r], -g.e(2, 3)[r]));
  EXPECT_TRUE(samePoly(alg, xi.xiMinus[0][1], -g.e(1, 2)[1]));
}
