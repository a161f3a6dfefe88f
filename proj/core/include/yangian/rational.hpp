#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace yangian {

// Exact rational number. Values that fit in a reduced int64 fraction are kept
// inline; anything larger spills to a heap-allocated mpq_class.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT(implicit)
  Rational(int n) noexcept : num_(n) {}           // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept;
  ~Rational();

  bool isZero() const noexcept { return big_ == nullptr && num_ == 0; }
  bool isOne() const noexcept { return big_ == nullptr && num_ == 1 && den_ == 1; }
  bool isInteger() const;
  int sign() const;

  mpq_class toMpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational pow(int e) const;

  // Canonical encoding "p/q" (q >= 1, always present).
  std::string str() const;
  static Rational parse(std::string_view text);

  std::size_t hash() const;

 private:
  void setFromMpq(const mpq_class& q);
  void setSmall(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  mpq_class* big_ = nullptr;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// Binomial coefficient binom(n, k) for integer n (possibly negative), k >= 0.
Rational binomial(std::int64_t n, std::int64_t k);

}  // namespace yangian
