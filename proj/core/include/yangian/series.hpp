#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yangian/ring.hpp"

namespace yangian {

// ---- single-variable series -------------------------------------------------

// Sum_{r=0..order} a_r u^{-r}, exact through `order`.
template <class E>
class USeries {
 public:
  USeries() = default;
  explicit USeries(int order) : coef_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("USeries: negative order");
  }

  int order() const noexcept { return static_cast<int>(coef_.size()) - 1; }
  const E& operator[](int r) const {
    if (r < 0 || r > order()) throw std::out_of_range("USeries: coefficient " + std::to_string(r) + " outside order");
    return coef_[r];
  }
  E& at(int r) {
    if (r < 0 || r > order()) throw std::out_of_range("USeries: coefficient " + std::to_string(r) + " outside order");
    return coef_[r];
  }
  // Index of the first nonzero coefficient, order()+1 if none.
  int valuation() const {
    for (int r = 0; r <= order(); ++r) {
      if (!coef_[r].isZero()) return r;
    }
    return order() + 1;
  }
  USeries truncated(int order) const {
    USeries out(std::min(order, this->order()));
    for (int r = 0; r <= out.order(); ++r) out.coef_[r] = coef_[r];
    return out;
  }

  USeries operator-() const {
    USeries out(order());
    for (int r = 0; r <= order(); ++r) out.coef_[r] = -coef_[r];
    return out;
  }
  friend USeries operator+(const USeries& a, const USeries& b) {
    USeries out(std::min(a.order(), b.order()));
    for (int r = 0; r <= out.order(); ++r) out.coef_[r] = a.coef_[r] + b.coef_[r];
    return out;
  }
  friend USeries operator-(const USeries& a, const USeries& b) {
    USeries out(std::min(a.order(), b.order()));
    for (int r = 0; r <= out.order(); ++r) out.coef_[r] = a.coef_[r] - b.coef_[r];
    return out;
  }
  friend USeries operator*(const Rational& q, const USeries& a) {
    USeries out(a.order());
    for (int r = 0; r <= a.order(); ++r) out.coef_[r] = q * a.coef_[r];
    return out;
  }

 private:
  std::vector<E> coef_;
};

template <class E>
USeries<E> constantSeries(const E& value, int order) {
  USeries<E> out(order);
  out.at(0) = value;
  return out;
}

template <class Ring>
USeries<typename Ring::Elem> mul(const Ring& ring, const USeries<typename Ring::Elem>& a,
                                 const USeries<typename Ring::Elem>& b) {
  using E = typename Ring::Elem;
  USeries<E> out(std::min(a.order(), b.order()));
  for (int r = 0; r <= out.order(); ++r) {
    std::vector<E> parts;
    for (int k = 0; k <= r; ++k) {
      if (a[k].isZero() || b[r - k].isZero()) continue;
      parts.push_back(ring.mul(a[k], b[r - k]));
    }
    out.at(r) = ring.sum(parts);
  }
  return out;
}

template <class Ring, class... Rest>
USeries<typename Ring::Elem> product(const Ring& ring, const USeries<typename Ring::Elem>& first,
                                     const Rest&... rest) {
  USeries<typename Ring::Elem> acc = first;
  ((acc = mul(ring, acc, rest)), ...);
  return acc;
}

// Right-and-left inverse of a series with constant term exactly 1.
template <class Ring>
USeries<typename Ring::Elem> invert(const Ring& ring, const USeries<typename Ring::Elem>& s) {
  using E = typename Ring::Elem;
  if (!(s[0] == ring.one())) throw std::invalid_argument("invert: constant term is not 1");
  USeries<E> out(s.order());
  out.at(0) = ring.one();
  for (int r = 1; r <= s.order(); ++r) {
    std::vector<E> parts;
    for (int k = 1; k <= r; ++k) {
      if (s[k].isZero() || out[r - k].isZero()) continue;
      parts.push_back(-ring.mul(s[k], out[r - k]));
    }
    out.at(r) = ring.sum(parts);
  }
  return out;
}

// Coefficients of the shifted kernel: (u + c)^{-k} = sum_r shiftWeight(k, r, c) u^{-r}.
Rational shiftWeight(int k, int r, const Rational& c);

// s(u + c).
template <class E>
USeries<E> shift(const USeries<E>& s, const Rational& c) {
  if (c.isZero()) return s;
  USeries<E> out(s.order());
  for (int r = 0; r <= s.order(); ++r) {
    E value = s[r];
    for (int k = 1; k < r; ++k) {
      if (s[k].isZero()) continue;
      value = value + shiftWeight(k, r, c) * s[k];
    }
    out.at(r) = value;
  }
  return out;
}

// s(-u).
template <class E>
USeries<E> reflect(const USeries<E>& s) {
  USeries<E> out(s.order());
  for (int r = 0; r <= s.order(); ++r) out.at(r) = (r % 2 ? Rational(-1) : Rational(1)) * s[r];
  return out;
}

// Keeps coefficients r >= 2.
template <class E>
USeries<E> strictTail(const USeries<E>& s) {
  USeries<E> out(s.order());
  for (int r = 2; r <= s.order(); ++r) out.at(r) = s[r];
  return out;
}

template <class Ring>
USeries<typename Ring::Elem> superCommutator(const Ring& ring, const USeries<typename Ring::Elem>& a,
                                             const USeries<typename Ring::Elem>& b) {
  using E = typename Ring::Elem;
  USeries<E> a0(a.order()), a1(a.order()), b0(b.order()), b1(b.order());
  for (int r = 0; r <= a.order(); ++r) std::tie(a0.at(r), a1.at(r)) = ring.split(a[r]);
  for (int r = 0; r <= b.order(); ++r) std::tie(b0.at(r), b1.at(r)) = ring.split(b[r]);
  return mul(ring, a, b) - mul(ring, b0, a) - mul(ring, b1, a0) + mul(ring, b1, a1);
}

template <class Ring>
USeries<typename Ring::Elem> antiCommutator(const Ring& ring, const USeries<typename Ring::Elem>& a,
                                            const USeries<typename Ring::Elem>& b) {
  return mul(ring, a, b) + mul(ring, b, a);
}

// Coefficientwise [p, s_r] and [s_r, p] for a constant element p.
template <class Ring>
USeries<typename Ring::Elem> bracketLeft(const Ring& ring, const typename Ring::Elem& p,
                                         const USeries<typename Ring::Elem>& s) {
  USeries<typename Ring::Elem> out(s.order());
  for (int r = 0; r <= s.order(); ++r) out.at(r) = ring.bracket(p, s[r]);
  return out;
}

template <class Ring>
USeries<typename Ring::Elem> bracketRight(const Ring& ring, const USeries<typename Ring::Elem>& s,
                                          const typename Ring::Elem& p) {
  USeries<typename Ring::Elem> out(s.order());
  for (int r = 0; r <= s.order(); ++r) out.at(r) = ring.bracket(s[r], p);
  return out;
}

// ---- bivariate series -------------------------------------------------------

inline constexpr int kInf = 1 << 20;
inline constexpr int kPositiveWindow = 2;

// Exactness window: coefficient (x, y) of u^{-x} v^{-y} is exact when
// x <= hiU, y <= hiV and x + y <= hiT. The lo fields bound the support.
struct Window {
  int loU = 0, loV = 0, loT = 0;
  int hiU = kInf, hiV = kInf, hiT = kInf;

  bool contains(int x, int y) const noexcept {
    return x >= loU && y >= loV && x + y >= loT && x <= hiU && y <= hiV && x + y <= hiT;
  }
  bool empty() const noexcept { return hiU < loU || hiV < loV || hiT < loT; }
};

inline int satAdd(int a, int b) noexcept { return (a >= kInf || b >= kInf) ? kInf : a + b; }

Window productWindow(const Window& a, const Window& b);
Window sumWindow(const Window& a, const Window& b);

template <class E>
class BiSeries {
 public:
  using Key = std::pair<int, int>;

  BiSeries() = default;
  explicit BiSeries(Window w) : window_(w) {}

  const Window& window() const noexcept { return window_; }
  const std::map<Key, E>& coefficients() const noexcept { return c_; }

  // Coefficient of u^{-x} v^{-y}; must lie inside the window.
  E at(int x, int y) const {
    if (x > window_.hiU || y > window_.hiV || x + y > window_.hiT) {
      throw std::out_of_range("BiSeries: coefficient outside exactness window");
    }
    auto it = c_.find({x, y});
    return it == c_.end() ? E{} : it->second;
  }
  void set(int x, int y, E value) {
    if (!window_.contains(x, y)) {
      if (value.isZero()) return;
      throw std::out_of_range("BiSeries: nonzero coefficient outside window");
    }
    if (value.isZero()) {
      c_.erase({x, y});
    } else {
      c_[{x, y}] = std::move(value);
    }
  }

  BiSeries clipped(int hiT) const {
    Window w = window_;
    w.hiT = std::min(w.hiT, hiT);
    BiSeries out(w);
    for (const auto& [k, v] : c_) {
      if (w.contains(k.first, k.second)) out.c_.emplace(k, v);
    }
    return out;
  }

  BiSeries operator-() const {
    BiSeries out(window_);
    for (const auto& [k, v] : c_) out.c_.emplace(k, -v);
    return out;
  }
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) { return combine(a, b, false); }
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) { return combine(a, b, true); }
  friend BiSeries operator*(const Rational& q, const BiSeries& a) {
    BiSeries out(a.window_);
    if (q.isZero()) return out;
    for (const auto& [k, v] : a.c_) out.c_.emplace(k, q * v);
    return out;
  }

  // Coefficient (x, y) of the result is coefficient (x + a, y + b) of this,
  // i.e. multiplication by u^a v^b.
  BiSeries monomialMultiply(int a, int b) const {
    Window w = window_;
    w.loU -= a;
    w.loV -= b;
    w.loT -= a + b;
    if (w.hiU < kInf) w.hiU -= a;
    if (w.hiV < kInf) w.hiV -= b;
    if (w.hiT < kInf) w.hiT -= a + b;
    if (w.loU < -kPositiveWindow || w.loV < -kPositiveWindow) {
      throw std::out_of_range("BiSeries: positive-exponent window overflow");
    }
    BiSeries out(w);
    for (const auto& [k, v] : c_) out.c_.emplace(Key{k.first - a, k.second - b}, v);
    return out;
  }

 private:
  static BiSeries combine(const BiSeries& a, const BiSeries& b, bool subtract) {
    BiSeries out(sumWindow(a.window_, b.window_));
    for (const auto& [k, v] : a.c_) {
      if (out.window_.contains(k.first, k.second)) out.c_.emplace(k, v);
    }
    for (const auto& [k, v] : b.c_) {
      if (!out.window_.contains(k.first, k.second)) continue;
      auto it = out.c_.find(k);
      if (it == out.c_.end()) {
        out.c_.emplace(k, subtract ? -v : v);
      } else {
        it->second = subtract ? it->second - v : it->second + v;
        if (it->second.isZero()) out.c_.erase(it);
      }
    }
    return out;
  }

  Window window_;
  std::map<Key, E> c_;
};

template <class E>
BiSeries<E> fromU(const USeries<E>& s) {
  Window w;
  w.loU = s.valuation();
  w.loV = 0;
  w.loT = w.loU;
  w.hiU = s.order();
  BiSeries<E> out(w);
  for (int r = 0; r <= s.order(); ++r) out.set(r, 0, s[r]);
  return out;
}

template <class E>
BiSeries<E> fromV(const USeries<E>& s) {
  Window w;
  w.loU = 0;
  w.loV = s.valuation();
  w.loT = w.loV;
  w.hiV = s.order();
  BiSeries<E> out(w);
  for (int r = 0; r <= s.order(); ++r) out.set(0, r, s[r]);
  return out;
}

template <class Ring>
BiSeries<typename Ring::Elem> biMul(const Ring& ring, const BiSeries<typename Ring::Elem>& a,
                                    const BiSeries<typename Ring::Elem>& b, int capT = kInf) {
  using E = typename Ring::Elem;
  Window w = productWindow(a.window(), b.window());
  w.hiT = std::min(w.hiT, capT);
  std::map<std::pair<int, int>, std::vector<E>> parts;
  for (const auto& [ka, va] : a.coefficients()) {
    for (const auto& [kb, vb] : b.coefficients()) {
      int x = ka.first + kb.first, y = ka.second + kb.second;
      if (!w.contains(x, y)) continue;
      parts[{x, y}].push_back(ring.mul(va, vb));
    }
  }
  BiSeries<E> out(w);
  for (auto& [k, v] : parts) out.set(k.first, k.second, ring.sum(v));
  return out;
}

template <class Ring>
BiSeries<typename Ring::Elem> biCommutator(const Ring& ring, const BiSeries<typename Ring::Elem>& a,
                                           const BiSeries<typename Ring::Elem>& b, int capT = kInf) {
  using E = typename Ring::Elem;
  auto splitAll = [&](const BiSeries<E>& s, BiSeries<E>& even, BiSeries<E>& odd) {
    even = BiSeries<E>(s.window());
    odd = BiSeries<E>(s.window());
    for (const auto& [k, v] : s.coefficients()) {
      auto [e, o] = ring.split(v);
      even.set(k.first, k.second, std::move(e));
      odd.set(k.first, k.second, std::move(o));
    }
  };
  BiSeries<E> a0, a1, b0, b1;
  splitAll(a, a0, a1);
  splitAll(b, b0, b1);
  // ab - (b0 a + b1 a0 - b1 a1)
  BiSeries<E> out = biMul(ring, a, b, capT) - biMul(ring, b0, a, capT);
  if (!b1.coefficients().empty()) out = out - biMul(ring, b1, a0, capT) + biMul(ring, b1, a1, capT);
  return out;
}

template <class Ring>
BiSeries<typename Ring::Elem> outerProduct(const Ring& ring, const USeries<typename Ring::Elem>& a,
                                           const USeries<typename Ring::Elem>& b, int capT = kInf) {
  return biMul(ring, fromU(a), fromV(b), capT);
}

struct Monomial {
  int u = 0;  // power of u
  int v = 0;  // power of v
  Rational coef;
};

// p(u, v) * A for a polynomial p of degree <= kPositiveWindow.
template <class E>
BiSeries<E> uMultiply(const BiSeries<E>& a, const std::vector<Monomial>& poly) {
  bool first = true;
  BiSeries<E> out;
  for (const auto& mono : poly) {
    if (mono.u < 0 || mono.v < 0 || mono.u + mono.v > kPositiveWindow) {
      throw std::out_of_range("uMultiply: polynomial degree exceeds the positive window");
    }
    BiSeries<E> term = mono.coef * a.monomialMultiply(mono.u, mono.v);
    out = first ? term : out + term;
    first = false;
  }
  return out;
}

// (g(u + cu) - g(v + cv)) / ((u + cu) - (v + cv)).
template <class E>
BiSeries<E> diffQuotient(const USeries<E>& g, const Rational& cu, const Rational& cv, int capT = kInf) {
  const int D = g.order();
  Window w;
  w.loU = 1;
  w.loV = 1;
  w.loT = 2;
  w.hiU = D;
  w.hiV = D;
  w.hiT = std::min(D + 1, capT);
  BiSeries<E> out(w);
  for (int x = 1; x <= D; ++x) {
    for (int y = 1; y <= D && x + y <= w.hiT; ++y) {
      E value{};
      for (int r = 1; r <= x; ++r) {
        Rational wr = shiftWeight(r, x, cu);
        if (wr.isZero()) continue;
        for (int s = 1; s <= y; ++s) {
          Rational ws = shiftWeight(s, y, cv);
          if (ws.isZero() || g[r + s - 1].isZero()) continue;
          value = value - (wr * ws) * g[r + s - 1];
        }
      }
      out.set(x, y, std::move(value));
    }
  }
  return out;
}

// ---- matrices ---------------------------------------------------------------

template <class E>
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(int n, int order) : n_(n), entries_(static_cast<std::size_t>(n) * n, USeries<E>(order)) {}

  int size() const noexcept { return n_; }
  int order() const {
    int o = kInf;
    for (const auto& e : entries_) o = std::min(o, e.order());
    return o;
  }
  // 1-based.
  const USeries<E>& operator()(int i, int j) const { return entries_[(i - 1) * n_ + (j - 1)]; }
  USeries<E>& at(int i, int j) { return entries_[(i - 1) * n_ + (j - 1)]; }

 private:
  int n_ = 0;
  std::vector<USeries<E>> entries_;
};

// Sign-free product (AB)_il = sum_j A_ij B_jl.
template <class Ring>
SeriesMatrix<typename Ring::Elem> matMul(const Ring& ring, const SeriesMatrix<typename Ring::Elem>& a,
                                         const SeriesMatrix<typename Ring::Elem>& b) {
  using E = typename Ring::Elem;
  if (a.size() != b.size()) throw std::invalid_argument("matMul: size mismatch");
  const int n = a.size();
  SeriesMatrix<E> out(n, std::min(a.order(), b.order()));
  for (int i = 1; i <= n; ++i) {
    for (int l = 1; l <= n; ++l) {
      USeries<E> acc(out.order());
      for (int j = 1; j <= n; ++j) acc = acc + mul(ring, a(i, j), b(j, l));
      out.at(i, l) = acc;
    }
  }
  return out;
}

// (M^t)_ij = M_{j'i'} (-1)^{bar i bar j + bar j} theta_i theta_j.
template <class E>
SeriesMatrix<E> superTranspose(const IndexData& idx, const SeriesMatrix<E>& m) {
  const int n = m.size();
  SeriesMatrix<E> out(n, m.order());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      out.at(i, j) = Rational(idx.transposeSign(i, j)) * m(idx.prime(j), idx.prime(i));
    }
  }
  return out;
}

template <class E>
SeriesMatrix<E> shiftMatrix(const SeriesMatrix<E>& m, const Rational& c) {
  SeriesMatrix<E> out(m.size(), m.order());
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) out.at(i, j) = shift(m(i, j), c);
  return out;
}

// T(u) with raw letters (normalized = false) or letters in normal form.
SeriesMatrix<Poly> tMatrix(const Algebra& alg, int order, bool normalized = false);

}  // namespace yangian
