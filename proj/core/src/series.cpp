#include "yangian/series.hpp"

namespace yangian {

Poly sumElems(std::vector<Poly>& parts) {
  if (parts.empty()) return Poly{};
  if (parts.size() == 1) return std::move(parts[0]);
  PolyAccumulator acc;
  for (const auto& p : parts) acc.add(p);
  return acc.finish();
}

Rational shiftWeight(int k, int r, const Rational& c) {
  if (r < k) return Rational(0);
  if (r == k) return Rational(1);
  if (c.isZero()) return Rational(0);
  return binomial(-k, r - k) * c.pow(r - k);
}

Window productWindow(const Window& a, const Window& b) {
  Window w;
  w.loU = a.loU + b.loU;
  w.loV = a.loV + b.loV;
  w.loT = std::max(a.loT + b.loT, w.loU + w.loV);
  w.hiU = std::min(satAdd(a.hiU, b.loU), satAdd(b.hiU, a.loU));
  w.hiV = std::min(satAdd(a.hiV, b.loV), satAdd(b.hiV, a.loV));
  w.hiT = std::min(satAdd(a.hiT, b.loT), satAdd(b.hiT, a.loT));
  return w;
}

Window sumWindow(const Window& a, const Window& b) {
  Window w;
  w.loU = std::min(a.loU, b.loU);
  w.loV = std::min(a.loV, b.loV);
  w.loT = std::min(a.loT, b.loT);
  w.hiU = std::min(a.hiU, b.hiU);
  w.hiV = std::min(a.hiV, b.hiV);
  w.hiT = std::min(a.hiT, b.hiT);
  return w;
}

SeriesMatrix<Poly> tMatrix(const Algebra& alg, int order, bool normalized) {
  if (order < 1) throw std::invalid_argument("tMatrix: order must be at least 1");
  const int n = alg.index().N();
  SeriesMatrix<Poly> out(n, order);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      auto& e = out.at(i, j);
      for (int r = 0; r <= order; ++r) e.at(r) = normalized ? alg.tNormal(i, j, r) : alg.t(i, j, r);
    }
  }
  return out;
}

}  // namespace yangian
