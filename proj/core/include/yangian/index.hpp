#pragma once

#include "yangian/rational.hpp"

namespace yangian {

inline constexpr int kMaxRank = 3;

// Index combinatorics for osp(1|2m): N = 2m+1, i' = 2m+2-i, the parity bar(i)
// and the sign theta(i).
class IndexData {
 public:
  explicit IndexData(int m);

  int m() const noexcept { return m_; }
  int N() const noexcept { return N_; }
  int middle() const noexcept { return m_ + 1; }

  int bar(int i) const noexcept { return i == m_ + 1 ? 0 : 1; }
  int theta(int i) const noexcept { return i <= m_ + 1 ? 1 : -1; }
  int prime(int i) const noexcept { return N_ + 1 - i; }
  int parity(int i, int j) const noexcept { return (bar(i) + bar(j)) & 1; }

  // (-1)^{bar i bar j + bar j} theta_i theta_j, the super-transposition sign.
  int transposeSign(int i, int j) const noexcept;

  // t_ij is a PBW letter iff i+j <= 2m+2 (i != m+1) or i+j < 2m+2 (i = m+1).
  bool allowed(int i, int j) const noexcept;
  int allowedPerLevel() const noexcept { return 2 * m_ * m_ + 3 * m_ + 1; }

  Rational kappa() const { return Rational(-2 * m_ - 1, 2); }

  bool inRange(int i) const noexcept { return i >= 1 && i <= N_; }

 private:
  int m_;
  int N_;
};

inline int signOf(int exponent) noexcept { return (exponent & 1) ? -1 : 1; }

}  // namespace yangian
