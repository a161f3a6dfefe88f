#include <algorithm>
#include <sstream>

#include "suite_impl.hpp"

namespace yangian::detail {

Workspace::Workspace(const Algebra& a, int ord, std::uint64_t s)
    : alg(a), ring{&a}, m(a.m()), order(ord), seed(s), roots(a.m()) {
  T = tMatrix(alg, order, true);
  g = gaussDecompose(ring, T);
  for (int i = 1; i <= m; ++i) k.push_back(yangian::mul(ring, g.hinv(i), g.h(i + 1)));
  c = cLetterSeries(alg, order);
  z = zSeries(ring, c);
  xi = xiSeries(g, k);
}

const Morphism& Workspace::sigma() const {
  std::call_once(sigmaOnce_, [&] { sigma_ = std::make_unique<Morphism>(sigmaMorphism(alg)); });
  return *sigma_;
}

const Morphism& Workspace::tau() const {
  std::call_once(tauOnce_, [&] { tau_ = std::make_unique<Morphism>(tauMorphism(alg)); });
  return *tau_;
}

const Coproduct& Workspace::delta() const {
  std::call_once(deltaOnce_, [&] { delta_ = std::make_unique<Coproduct>(alg); });
  return *delta_;
}

Rational Ctx::k(const Rational& value) {
  const int n = count_++;
  if (perturb_ && *perturb_ == n) return value + Rational(1);
  return value;
}

BS Ctx::brLeft(const Poly& p, const BS& s) const {
  BS out(s.window());
  for (const auto& [key, v] : s.coefficients()) out.set(key.first, key.second, ws.alg.bracket(p, v));
  return out;
}

namespace {

std::string clip(std::string s) {
  constexpr std::size_t kMax = 240;
  if (s.size() > kMax) {
    s.resize(kMax);
    s += " ...";
  }
  return s;
}

}  // namespace

void Ctx::record(std::size_t n, const std::string& where, const std::string& value) {
  terms_ += n;
  if (detail_.empty()) detail_ = clip(where + ": " + value);
}

void Ctx::zero(const BS& r) {
  const Window& w = r.window();
  for (int x = 0; x <= D; ++x) {
    for (int y = 0; y <= D && x + y <= D + 1; ++y) {
      if (x > w.hiU || y > w.hiV || x + y > w.hiT) continue;
      ++coefficients_;
      Poly v = r.at(x, y);
      if (!v.isZero()) {
        record(v.size(), "(" + std::to_string(x) + "," + std::to_string(y) + ")",
               formatPoly(ws.alg.codec(), v));
      }
    }
  }
}

void Ctx::zero(const PS& r) {
  for (int x = 0; x <= std::min(D, r.order()); ++x) {
    ++coefficients_;
    if (!r[x].isZero()) record(r[x].size(), "[" + std::to_string(x) + "]", formatPoly(ws.alg.codec(), r[x]));
  }
}

void Ctx::zero(const Poly& r, const std::string& where) {
  ++coefficients_;
  if (!r.isZero()) record(r.size(), where, formatPoly(ws.alg.codec(), r));
}

void Ctx::zero(const TSeries& r) {
  for (int x = 0; x <= r.order(); ++x) zero(r[x], "[" + std::to_string(x) + "]");
}

void Ctx::zero(const TensorPoly& r, const std::string& where) {
  ++coefficients_;
  if (!r.isZero()) record(r.size(), where, formatTensor(ws.alg.codec(), r));
}

void Ctx::fail(const std::string& message) {
  failed_ = true;
  if (detail_.empty()) detail_ = clip(message);
}

void serreResidues(Ctx& c, const PS& x, const PS& y, int k) {
  const int D = c.D;
  std::vector<int> r(k, 1);
  // Non-decreasing tuples r_1 <= ... <= r_k.
  std::function<void(int, int, int)> walk = [&](int pos, int lo, int used) {
    if (pos == k) {
      for (int s = 1; used + s <= D + k; ++s) {
        std::vector<int> perm = r;
        Rational weight(1);
        for (int a = 0; a < k;) {
          int b = a;
          while (b < k && r[b] == r[a]) ++b;
          for (int t = 2; t <= b - a; ++t) weight *= Rational(t);
          a = b;
        }
        std::vector<Poly> parts;
        do {
          Poly acc = y[s];
          for (int a = k - 1; a >= 0; --a) acc = c.br(x[perm[a]], acc);
          parts.push_back(std::move(acc));
        } while (std::next_permutation(perm.begin(), perm.end()));
        Poly total = weight * sumElems(parts);
        std::ostringstream where;
        where << "r=(";
        for (int a = 0; a < k; ++a) where << (a ? "," : "") << r[a];
        where << "),s=" << s;
        c.zero(total, where.str());
      }
      return;
    }
    for (int v = lo; used + v + (k - pos - 1) * v + 1 <= D + k; ++v) {
      r[pos] = v;
      walk(pos + 1, v, used + v);
    }
  };
  walk(0, 1, 0);
}

std::string idx(std::initializer_list<std::pair<const char*, int>> items) {
  std::string out;
  for (const auto& [name, v] : items) {
    if (!out.empty()) out += ",";
    out += name;
    out += "=";
    out += std::to_string(v);
  }
  return out;
}

}  // namespace yangian::detail
