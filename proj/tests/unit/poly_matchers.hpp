#pragma once

#include <gtest/gtest.h>

#include "yangian/algebra.hpp"

namespace yangian::testing {

inline ::testing::AssertionResult samePoly(const Algebra& alg, const Poly& got, const Poly& want) {
  if (got == want) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << formatPoly(alg.codec(), got) << ", want "
                                       << formatPoly(alg.codec(), want);
}

inline ::testing::AssertionResult isZeroPoly(const Algebra& alg, const Poly& got) {
  return samePoly(alg, got, Poly{});
}

}  // namespace yangian::testing
