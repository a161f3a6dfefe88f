#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "yangian/gauss.hpp"

namespace yangian {

// Raw expressions of c^(r), r = 1..order, as the (1,1) entry of
// T(u - kappa) T^t(u) in the free algebra.
std::vector<Poly> rawCentralLetters(const Algebra& alg, int order);

// A letter map extended multiplicatively or anti-multiplicatively with Koszul
// signs. Images of t letters come from the supplied map; the image of c^(r) is
// the image of its raw expression.
class Morphism {
 public:
  using LetterMap = std::function<Poly(const Letter&)>;

  Morphism(const Algebra& alg, std::string name, bool anti, LetterMap tImage);
  ~Morphism();
  Morphism(Morphism&&) noexcept;
  Morphism& operator=(Morphism&&) noexcept;

  const std::string& name() const noexcept;
  bool anti() const noexcept;
  const Algebra& algebra() const noexcept;

  // Image of a single letter in raw letters.
  const Poly& letterImage(LetterId id) const;
  // Image of a single letter in normal form.
  const Poly& normalImage(LetterId id) const;

  // Extension in the free algebra (no reduction).
  Poly applyFree(const Poly& p) const;
  // Extension followed by reduction; products are taken in normal form.
  Poly apply(const Poly& p) const;
  PSeries apply(const PSeries& s) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// t_ij(u) -> t_ji(-u-1) (-1)^{bar i bar j + bar j}.
Morphism sigmaMorphism(const Algebra& alg);
// t_ij(u) -> t_ji(u) (-1)^{bar i bar j + bar j}, anti-multiplicative.
Morphism tauMorphism(const Algebra& alg);
// t_ij(u) -> phi(u) t_ij(u) with phi(u) = 1 + sum_a phi[a-1] u^{-a}.
Morphism muPhiMorphism(const Algebra& alg, std::vector<Rational> phi);
Morphism identityMorphism(const Algebra& alg);

// ---- tensor square ----------------------------------------------------------

struct TensorTerm {
  Word left;
  Word right;
  Rational coef;
};

// Element of X (x) X stored as sorted (left word, right word) pairs.
class TensorPoly {
 public:
  TensorPoly() = default;
  TensorPoly(Rational scalar);  // NOLINT(implicit)
  static TensorPoly tensor(const Poly& a, const Poly& b);
  static TensorPoly left(const Poly& a) { return tensor(a, Poly(Rational(1))); }
  static TensorPoly right(const Poly& b) { return tensor(Poly(Rational(1)), b); }
  // A word over the doubled alphabet; right letters are moved past left
  // letters with Koszul signs.
  static TensorPoly fromMixedWord(int m, const std::vector<std::pair<bool, LetterId>>& letters,
                                  const Rational& coef = 1);

  int m() const noexcept { return m_; }
  const std::vector<TensorTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool isZero() const noexcept { return terms_.empty(); }

  TensorPoly operator-() const;
  friend TensorPoly operator+(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator-(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator*(const Rational& q, const TensorPoly& a);
  friend bool operator==(const TensorPoly& a, const TensorPoly& b);

  static TensorPoly fromTerms(int m, std::vector<TensorTerm> terms);

 private:
  int m_ = 0;
  std::vector<TensorTerm> terms_;
};

// Product in the free tensor square: (a (x) b)(c (x) d) = (-1)^{p(b)p(c)} ac (x) bd.
TensorPoly multiplyFree(const TensorPoly& x, const TensorPoly& y);
// Both factors reduced to normal form.
TensorPoly tensorNormalize(const Algebra& alg, const TensorPoly& x);
std::string formatTensor(const LetterCodec& codec, const TensorPoly& x);

// Ring of normal-form tensors, for the series templates.
struct TensorRing {
  using Elem = TensorPoly;
  const Algebra* alg = nullptr;

  Elem one() const { return TensorPoly(Rational(1)); }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem bracket(const Elem& a, const Elem& b) const;
  std::pair<Elem, Elem> split(const Elem& a) const;
  int parity(const Elem& a) const;
  Elem sum(std::vector<Elem>& parts) const;
};

using TSeries = USeries<TensorPoly>;

// Coefficientwise a(u) (x) b(u).
TSeries tensorSeries(const PSeries& a, const PSeries& b);

// Delta(t_ij(u)) = sum_k t_ik(u) (x) t_kj(u) and Delta(c(u)) = c(u) (x) c(u),
// extended multiplicatively; results are in normal form.
class Coproduct {
 public:
  explicit Coproduct(const Algebra& alg);
  ~Coproduct();

  const TensorPoly& letterImage(LetterId id) const;
  TensorPoly apply(const Poly& p) const;
  TSeries apply(const PSeries& s) const;
  const TensorRing& ring() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace yangian
