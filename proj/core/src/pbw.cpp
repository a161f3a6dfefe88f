#include <stdexcept>
#include <vector>

#include "yangian/algebra.hpp"

namespace yangian {

namespace {

using Series = std::vector<mpz_class>;

Series multiplyTruncated(const Series& a, const Series& b, int d) {
  Series out(static_cast<std::size_t>(d) + 1, 0);
  for (int x = 0; x <= d; ++x) {
    if (a[x] == 0) continue;
    for (int y = 0; x + y <= d; ++y) out[x + y] += a[x] * b[y];
  }
  return out;
}

}  // namespace

mpz_class pbwSeriesCount(int m, int d) {
  if (m < 1) throw std::invalid_argument("pbwSeriesCount: m must be positive");
  if (d < 0) throw std::invalid_argument("pbwSeriesCount: negative degree");
  const int oddCount = 2 * m;
  const int evenCount = 2 * m * m + m + 1;
  Series total(static_cast<std::size_t>(d) + 1, 0);
  total[0] = 1;
  for (int r = 1; r <= d; ++r) {
    // (1 + q^r) and 1/(1 - q^r) truncated at q^d
    Series odd(static_cast<std::size_t>(d) + 1, 0), even(static_cast<std::size_t>(d) + 1, 0);
    odd[0] = 1;
    odd[r] = 1;
    for (int k = 0; k <= d; k += r) even[k] = 1;
    for (int n = 0; n < oddCount; ++n) total = multiplyTruncated(total, odd, d);
    for (int n = 0; n < evenCount; ++n) total = multiplyTruncated(total, even, d);
  }
  return total[d];
}

}  // namespace yangian
