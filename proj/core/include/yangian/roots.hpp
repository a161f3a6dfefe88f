#pragma once

#include <vector>

#include "yangian/rational.hpp"

namespace yangian {

// Root data of osp(1|2m) on eps_1..eps_m with (eps_i, eps_j) = -delta_ij and
// eps_{m+1} = 0.
class RootData {
 public:
  explicit RootData(int m);

  int m() const noexcept { return m_; }

  // (eps_i, eps_j) for i, j in 1..m+1.
  Rational epsForm(int i, int j) const;
  // (eps_i, alpha_j) with alpha_j = eps_j - eps_{j+1}, j in 1..m.
  Rational epsAlpha(int i, int j) const;
  // (alpha_i, alpha_j).
  Rational alphaForm(int i, int j) const;
  // c_ij = (alpha_i, alpha_j) for i < m, 2 (alpha_i, alpha_j) for i = m.
  int cartan(int i, int j) const;
  // k = 1 + c_ij for i != j.
  int serreOrder(int i, int j) const { return 1 + cartan(i, j); }

  // Positive roots in coordinates on eps_1..eps_m:
  // alpha_ij, alpha_ij', alpha_{i,m+1}, alpha_ii'.
  std::vector<std::vector<int>> positiveRoots() const;

 private:
  int m_;
};

}  // namespace yangian
