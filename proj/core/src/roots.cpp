#include "yangian/roots.hpp"

#include <stdexcept>

namespace yangian {

RootData::RootData(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("RootData: m must be positive");
}

Rational RootData::epsForm(int i, int j) const {
  if (i < 1 || j < 1 || i > m_ + 1 || j > m_ + 1) throw std::out_of_range("RootData: eps index");
  if (i != j || i == m_ + 1) return Rational(0);
  return Rational(-1);
}

Rational RootData::epsAlpha(int i, int j) const {
  if (j < 1 || j > m_) throw std::out_of_range("RootData: alpha index");
  return epsForm(i, j) - epsForm(i, j + 1);
}

Rational RootData::alphaForm(int i, int j) const {
  if (i < 1 || i > m_) throw std::out_of_range("RootData: alpha index");
  return epsAlpha(i, j) - epsAlpha(i + 1, j);
}

int RootData::cartan(int i, int j) const {
  Rational v = alphaForm(i, j);
  if (i == m_) v *= Rational(2);
  if (!v.isInteger()) throw std::logic_error("RootData: non-integral Cartan entry");
  return static_cast<int>(v.numerator().get_si());
}

std::vector<std::vector<int>> RootData::positiveRoots() const {
  std::vector<std::vector<int>> out;
  auto vec = [&](int a, int sa, int b, int sb) {
    std::vector<int> v(m_, 0);
    if (a <= m_) v[a - 1] += sa;
    if (b >= 1 && b <= m_) v[b - 1] += sb;
    return v;
  };
  for (int i = 1; i <= m_; ++i) {
    for (int j = i + 1; j <= m_; ++j) {
      out.push_back(vec(i, 1, j, -1));
      out.push_back(vec(i, 1, j, 1));
    }
    out.push_back(vec(i, 1, 0, 0));
    out.push_back(vec(i, 2, 0, 0));
  }
  return out;
}

}  // namespace yangian
