#include "yangian/gauss.hpp"

namespace yangian {

PSeries cLetterSeries(const Algebra& alg, int order) {
  PSeries out = constantSeries(Poly(Rational(1)), order);
  for (int r = 1; r <= order; ++r) out.at(r) = alg.c(r);
  return out;
}

XiData xiSeries(const GaussData& g, const std::vector<PSeries>& k) {
  const int m = g.m;
  XiData out;
  for (int i = 1; i <= m; ++i) {
    const Rational s(-(m - i), 2);
    out.kappa.push_back(shift(k.at(i - 1), s));
    out.xiPlus.push_back(shift(g.f(i + 1, i), s));
    out.xiMinus.push_back(-shift(g.e(i, i + 1), s));
  }
  const int mp = 2 * m + 2 - m;
  out.xiPlusLong = g.f(mp, m);
  out.xiMinusLong = -g.e(m, mp);
  return out;
}

}  // namespace yangian
