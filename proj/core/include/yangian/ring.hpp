#pragma once

#include <utility>
#include <vector>

#include "yangian/algebra.hpp"
#include "yangian/poly.hpp"

namespace yangian {

// Coefficient rings for the series templates. A ring supplies mul, bracket,
// split (parity parts), one and sum; elements support +, -, scalar * and
// isZero().

Poly sumElems(std::vector<Poly>& parts);

// The free superalgebra: products are concatenations.
struct FreeRing {
  using Elem = Poly;
  int m = 0;

  Elem one() const { return Poly(Rational(1)); }
  Elem mul(const Elem& a, const Elem& b) const { return multiply(a, b); }
  Elem bracket(const Elem& a, const Elem& b) const { return superCommutator(a, b); }
  std::pair<Elem, Elem> split(const Elem& a) const {
    auto parts = parityOf(a);
    return {std::move(parts.even), std::move(parts.odd)};
  }
  int parity(const Elem& a) const { return homogeneousParity(a); }
  Elem sum(std::vector<Elem>& parts) const { return sumElems(parts); }
};

// The quotient X(osp(1|2m)) in normal form.
struct NormalRing {
  using Elem = Poly;
  const Algebra* alg = nullptr;

  Elem one() const { return Poly(Rational(1)); }
  Elem mul(const Elem& a, const Elem& b) const { return alg->mul(a, b); }
  Elem bracket(const Elem& a, const Elem& b) const { return alg->bracket(a, b); }
  std::pair<Elem, Elem> split(const Elem& a) const {
    auto parts = parityOf(a);
    return {std::move(parts.even), std::move(parts.odd)};
  }
  int parity(const Elem& a) const { return homogeneousParity(a); }
  Elem sum(std::vector<Elem>& parts) const { return sumElems(parts); }
};

}  // namespace yangian
