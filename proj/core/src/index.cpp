#include "yangian/index.hpp"

#include <stdexcept>
#include <string>

namespace yangian {

IndexData::IndexData(int m) : m_(m), N_(2 * m + 1) {
  if (m < 1 || m > kMaxRank) {
    throw std::out_of_range("IndexData: m must lie in 1.." + std::to_string(kMaxRank));
  }
}

int IndexData::transposeSign(int i, int j) const noexcept {
  return signOf(bar(i) * bar(j) + bar(j)) * theta(i) * theta(j);
}

bool IndexData::allowed(int i, int j) const noexcept {
  if (i == m_ + 1) return i + j < 2 * m_ + 2;
  return i + j <= 2 * m_ + 2;
}

}  // namespace yangian
