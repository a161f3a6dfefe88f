#include <gtest/gtest.h>

#include "poly_matchers.hpp"
#include "yangian/morphisms.hpp"

using namespace yangian;
using yangian::testing::isZeroPoly;
using yangian::testing::samePoly;

TEST(Sigma, LetterImages) {
  Algebra alg(1);
  Morphism sigma = sigmaMorphism(alg);
  EXPECT_TRUE(samePoly(alg, sigma.apply(alg.t(1, 1, 1)), -alg.t(1, 1, 1)));
  EXPECT_TRUE(samePoly(alg, sigma.apply(alg.t(1, 2, 1)), -alg.t(2, 1, 1)));
  // (-u-1)^{-1} = -u^{-1} + u^{-2} - ... and (-u-1)^{-2} = u^{-2} - ...
  EXPECT_TRUE(samePoly(alg, sigma.applyFree(alg.t(1, 1, 2)), alg.t(1, 1, 2) + alg.t(1, 1, 1)));
}

TEST(Sigma, FourthPowerIsIdentity) {
  for (int m = 1; m <= 2; ++m) {
    Algebra alg(m);
    Morphism sigma = sigmaMorphism(alg);
    const int n = alg.index().N();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int r = 1; r <= 3; ++r) {
          Poly p = alg.t(i, j, r);
          for (int k = 0; k < 4; ++k) p = sigma.applyFree(p);
          EXPECT_TRUE(samePoly(alg, p, alg.t(i, j, r)));
        }
  }
}

TEST(Tau, AntiMultiplicative) {
  Algebra alg(1);
  Morphism tau = tauMorphism(alg);
  EXPECT_TRUE(samePoly(alg, tau.apply(alg.t(1, 2, 1)), alg.t(2, 1, 1)));
  Poly a = alg.t(1, 2, 1), b = alg.t(3, 2, 2);
  Poly lhs = tau.applyFree(multiply(a, b));
  Poly rhs = Rational(-1) * multiply(tau.applyFree(b), tau.applyFree(a));
  EXPECT_TRUE(samePoly(alg, lhs, rhs));
  for (int r = 1; r <= 3; ++r) EXPECT_TRUE(samePoly(alg, tau.apply(alg.c(r)), alg.c(r)));
}

TEST(Identity, LeavesElementsAlone) {
  Algebra alg(2);
  Morphism id = identityMorphism(alg);
  Poly p = alg.mul(alg.t(1, 3, 1), alg.t(2, 1, 2)) + alg.c(2);
  EXPECT_TRUE(samePoly(alg, id.apply(p), p));
}

TEST(Morphisms, PreserveTheTable) {
  Algebra alg(1);
  Morphism sigma = sigmaMorphism(alg), tau = tauMorphism(alg);
  for (const Morphism* phi : {&sigma, &tau}) {
    for (int r = 1; r <= 2; ++r)
      for (int s = 1; r + s <= 3; ++s) {
        Poly x = alg.t(1, 2, r), y = alg.t(2, 1, s);
        Poly residue = superCommutator(x, y) - alg.commutatorTable(1, 2, 2, 1, r, s);
        EXPECT_TRUE(isZeroPoly(alg, phi->apply(residue))) << phi->name() << " r=" << r << " s=" << s;
      }
  }
}

TEST(Mu, FixesCentralQuotientGenerators) {
  Algebra alg(1);
  Morphism mu = muPhiMorphism(alg, {Rational(2), Rational(-1, 3)});
  EXPECT_TRUE(samePoly(alg, mu.applyFree(alg.t(1, 2, 2)), alg.t(1, 2, 2) + Rational(2) * alg.t(1, 2, 1)));
  EXPECT_TRUE(samePoly(alg, mu.applyFree(alg.t(1, 1, 1)), alg.t(1, 1, 1) + Rational(2)));
}

TEST(Coproduct, LetterImages) {
  Algebra alg(1);
  Coproduct delta(alg);
  const Poly one(Rational(1));
  TensorPoly want = TensorPoly::tensor(alg.t(1, 2, 1), one) + TensorPoly::tensor(one, alg.t(1, 2, 1));
  EXPECT_TRUE(delta.apply(alg.t(1, 2, 1)) == want) << formatTensor(alg.codec(), delta.apply(alg.t(1, 2, 1)));
  TensorPoly two = TensorPoly::tensor(alg.t(1, 1, 2), one) + TensorPoly::tensor(one, alg.t(1, 1, 2));
  for (int k = 1; k <= 3; ++k) two = two + TensorPoly::tensor(alg.tNormal(1, k, 1), alg.tNormal(k, 1, 1));
  EXPECT_TRUE(delta.apply(alg.t(1, 1, 2)) == two);
}

TEST(Coproduct, KoszulSignOfRightTimesLeft) {
  Algebra alg(1);
  TensorRing ring{&alg};
  const Poly one(Rational(1));
  Poly x = alg.t(1, 2, 1), y = alg.t(2, 1, 1);
  TensorPoly rx = TensorPoly::tensor(one, x), ly = TensorPoly::tensor(y, one);
  EXPECT_TRUE(ring.mul(rx, ly) == Rational(-1) * TensorPoly::tensor(y, x));
}

TEST(Coproduct, CentralSeriesIsGroupLike) {
  Algebra alg(1);
  Coproduct delta(alg);
  for (int r = 1; r <= 3; ++r) {
    TensorPoly want;
    for (int a = 0; a <= r; ++a) {
      Poly ca = a == 0 ? Poly(Rational(1)) : alg.c(a);
      Poly cb = a == r ? Poly(Rational(1)) : alg.c(r - a);
      want = want + TensorPoly::tensor(ca, cb);
    }
    EXPECT_TRUE(delta.apply(alg.c(r)) == want) << r;
  }
}
