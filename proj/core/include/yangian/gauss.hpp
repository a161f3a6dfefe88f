#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "yangian/series.hpp"

namespace yangian {

using PSeries = USeries<Poly>;
using PBiSeries = BiSeries<Poly>;
using PMatrix = SeriesMatrix<Poly>;

// T = F H E with F unit lower-triangular, H diagonal, E unit upper-triangular.
struct GaussData {
  int m = 0;
  int order = 0;
  PMatrix F;
  PMatrix E;
  std::vector<PSeries> H;     // H[i-1] = h_i(u)
  std::vector<PSeries> Hinv;  // h_i(u)^{-1}

  const PSeries& h(int i) const { return H.at(i - 1); }
  const PSeries& hinv(int i) const { return Hinv.at(i - 1); }
  const PSeries& e(int i, int j) const { return E(i, j); }  // i < j
  const PSeries& f(int j, int i) const { return F(j, i); }  // i < j
};

template <class Ring>
GaussData gaussDecompose(const Ring& ring, const PMatrix& T) {
  const int n = T.size();
  const int order = T.order();
  GaussData g;
  g.m = (n - 1) / 2;
  g.order = order;
  g.F = PMatrix(n, order);
  g.E = PMatrix(n, order);
  for (int i = 1; i <= n; ++i) {
    g.F.at(i, i) = constantSeries(ring.one(), order);
    g.E.at(i, i) = constantSeries(ring.one(), order);
  }
  PMatrix A = T;
  for (int k = 1; k <= n; ++k) {
    const PSeries hk = A(k, k);
    const PSeries hkInv = invert(ring, hk);
    g.H.push_back(hk);
    g.Hinv.push_back(hkInv);
    for (int j = k + 1; j <= n; ++j) g.E.at(k, j) = mul(ring, hkInv, A(k, j));
    for (int i = k + 1; i <= n; ++i) g.F.at(i, k) = mul(ring, A(i, k), hkInv);
    // Schur complement: A_ij - f_ik h_k e_kj = A_ij - A_ik h_k^{-1} A_kj
    for (int i = k + 1; i <= n; ++i) {
      for (int j = k + 1; j <= n; ++j) A.at(i, j) = A(i, j) - mul(ring, g.F(i, k), A(k, j));
    }
  }
  return g;
}

// Submatrix on the given 1-based rows and columns.
template <class E>
SeriesMatrix<E> submatrix(const SeriesMatrix<E>& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("submatrix: must be square");
  const int n = static_cast<int>(rows.size());
  SeriesMatrix<E> out(n, a.order());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.at(i, j) = a(rows[i - 1], cols[j - 1]);
  return out;
}

// Inverse of a series matrix whose constant term is an invertible scalar matrix.
template <class Ring>
PMatrix matrixInverse(const Ring& ring, const PMatrix& a) {
  const int n = a.size();
  const int order = a.order();
  // C^{-1} by exact Gauss-Jordan.
  std::vector<std::vector<Rational>> c(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Poly& p = a(i + 1, j + 1)[0];
      if (!p.isScalar()) throw std::invalid_argument("matrixInverse: constant term is not scalar");
      c[i][j] = p.constantTerm();
    }
    c[i][n + i] = Rational(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!c[r][col].isZero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("matrixInverse: non-invertible minor");
    std::swap(c[pivot], c[col]);
    Rational inv = Rational(1) / c[col][col];
    for (auto& v : c[col]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || c[r][col].isZero()) continue;
      Rational factor = c[r][col];
      for (int k = 0; k < 2 * n; ++k) c[r][k] -= factor * c[col][k];
    }
  }
  // A = C (1 + Y) with Y = C^{-1}(A - C); A^{-1} = (1 + Y)^{-1} C^{-1}.
  PMatrix y(n, order);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int r = 1; r <= order; ++r) {
        std::vector<Poly> parts;
        for (int k = 1; k <= n; ++k) {
          const Rational& w = c[i - 1][n + k - 1];
          if (!w.isZero() && !a(k, j)[r].isZero()) parts.push_back(w * a(k, j)[r]);
        }
        y.at(i, j).at(r) = ring.sum(parts);
      }
    }
  }
  // Z_0 = 1, Z_r = -sum_{k>=1} Y_k Z_{r-k}
  PMatrix z(n, order);
  for (int i = 1; i <= n; ++i) z.at(i, i).at(0) = ring.one();
  for (int r = 1; r <= order; ++r) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        std::vector<Poly> parts;
        for (int k = 1; k <= r; ++k) {
          for (int s = 1; s <= n; ++s) {
            const Poly& yv = y(i, s)[k];
            const Poly& zv = z(s, j)[r - k];
            if (yv.isZero() || zv.isZero()) continue;
            parts.push_back(-ring.mul(yv, zv));
          }
        }
        z.at(i, j).at(r) = ring.sum(parts);
      }
    }
  }
  PMatrix out(n, order);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int r = 0; r <= order; ++r) {
        std::vector<Poly> parts;
        for (int k = 1; k <= n; ++k) {
          const Rational& w = c[k - 1][n + j - 1];
          if (!w.isZero() && !z(i, k)[r].isZero()) parts.push_back(w * z(i, k)[r]);
        }
        out.at(i, j).at(r) = ring.sum(parts);
      }
    }
  }
  return out;
}

// |A|_ij = a_ij - r_i (A^{ij})^{-1} c_j.
template <class Ring>
PSeries quasideterminant(const Ring& ring, const PMatrix& a, int i, int j) {
  const int n = a.size();
  if (n == 1) return a(1, 1);
  std::vector<int> rows, cols;
  for (int k = 1; k <= n; ++k) {
    if (k != i) rows.push_back(k);
    if (k != j) cols.push_back(k);
  }
  PMatrix minor = submatrix(a, rows, cols);
  PMatrix inv = matrixInverse(ring, minor);
  PSeries out = a(i, j);
  for (int p = 0; p < n - 1; ++p) {
    for (int q = 0; q < n - 1; ++q) {
      out = out - product(ring, a(i, cols[p]), inv(p + 1, q + 1), a(rows[q], j));
    }
  }
  return out;
}

// 1 + sum_r c^(r) u^{-r}.
PSeries cLetterSeries(const Algebra& alg, int order);

// (T(u - kappa) T^t(u))_{11} over the given ring and T.
template <class Ring>
PMatrix ttraProduct(const Ring& ring, const IndexData& idx, const PMatrix& T, bool transposeFirst = false) {
  PMatrix shifted = shiftMatrix(T, -idx.kappa());
  PMatrix tt = superTranspose(idx, T);
  return transposeFirst ? matMul(ring, tt, shifted) : matMul(ring, shifted, tt);
}

// prod_{i=1..m} h_i(u+i-1) h_i(u+i)^{-1} * h_{m+1}(u+m+1/2) h_{m+1}(u+m).
template <class Ring>
PSeries cSeriesProduct(const Ring& ring, const GaussData& g) {
  const int m = g.m;
  PSeries acc = constantSeries(ring.one(), g.order);
  for (int i = 1; i <= m; ++i) {
    acc = mul(ring, acc, shift(g.h(i), Rational(i - 1)));
    acc = mul(ring, acc, invert(ring, shift(g.h(i), Rational(i))));
  }
  acc = mul(ring, acc, shift(g.h(m + 1), Rational(2 * m + 1, 2)));
  acc = mul(ring, acc, shift(g.h(m + 1), Rational(m)));
  return acc;
}

// z(u) z(u + 1/2) = c(u - 1), solved order by order.
template <class Ring>
PSeries zSeries(const Ring& ring, const PSeries& c) {
  const int order = c.order();
  const PSeries target = shift(c, Rational(-1));
  PSeries z = constantSeries(ring.one(), order);
  for (int r = 1; r <= order; ++r) {
    // With z^(r) = 0 the order-r coefficient misses exactly 2 z^(r).
    PSeries trial = mul(ring, z, shift(z, Rational(1, 2)));
    z.at(r) = Rational(1, 2) * (target[r] - trial[r]);
  }
  return z;
}

// Normalized series of the Drinfeld-type presentation.
struct XiData {
  std::vector<PSeries> kappa;    // kappa_i(u), i = 1..m
  std::vector<PSeries> xiPlus;   // xi^+_i(u)
  std::vector<PSeries> xiMinus;  // xi^-_i(u)
  PSeries xiPlusLong;            // xi^+(u) = f_{m'm}(u)
  PSeries xiMinusLong;           // xi^-(u) = -e_{mm'}(u)
};

XiData xiSeries(const GaussData& g, const std::vector<PSeries>& k);

}  // namespace yangian
