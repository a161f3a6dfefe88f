#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "yangian/rational.hpp"
#include "yangian/word.hpp"

namespace yangian {

struct Term {
  Word word;
  Rational coef;
};

// Finite rational combination of words, sorted in canonical word order with no
// zero coefficients. The rank tag m is 0 for pure scalars.
class Poly {
 public:
  Poly() = default;
  Poly(Rational scalar);  // NOLINT(implicit)
  static Poly letter(const LetterCodec& codec, LetterId id, Rational coef = 1);
  static Poly word(int m, const Word& w, Rational coef = 1);
  // Terms must already be canonical (sorted, distinct, nonzero).
  static Poly fromSorted(int m, std::vector<Term> terms);

  int m() const noexcept { return m_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool isZero() const noexcept { return terms_.empty(); }
  bool isScalar() const noexcept;
  // Coefficient of the empty word.
  Rational constantTerm() const;
  Rational coefficient(const Word& w) const;
  int maxDegree() const noexcept;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& q);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Rational& q, Poly a) { return a *= q; }
  friend Poly operator*(Poly a, const Rational& q) { return a *= q; }

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  int m_ = 0;
  std::vector<Term> terms_;
};

// Joins two rank tags, rejecting letters from different m.
int joinRank(int a, int b);

// Hash-map accumulator that produces canonical Polys.
class PolyAccumulator {
 public:
  PolyAccumulator();
  ~PolyAccumulator();
  PolyAccumulator(PolyAccumulator&&) noexcept;
  PolyAccumulator& operator=(PolyAccumulator&&) noexcept;

  void add(const Word& w, const Rational& coef);
  void add(const Poly& p, const Rational& scale = 1);
  void noteRank(int m) { m_ = joinRank(m_, m); }
  bool empty() const;
  Poly finish();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int m_ = 0;
};

struct ParityParts {
  Poly even;
  Poly odd;
};

ParityParts parityOf(const Poly& p);
// Parity of a homogeneous Poly; -1 if inhomogeneous, 0 for zero.
int homogeneousParity(const Poly& p);

// Free-algebra operations (no reduction).
Poly multiply(const Poly& a, const Poly& b);
Poly superCommutator(const Poly& a, const Poly& b);
Poly antiCommutator(const Poly& a, const Poly& b);

// `<coef> <letters...>` terms joined by " + "; "0" for zero.
std::string formatPoly(const LetterCodec& codec, const Poly& p);
Poly parsePoly(const LetterCodec& codec, std::string_view text);

}  // namespace yangian
