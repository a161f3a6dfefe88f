#include "yangian/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace yangian {

namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class toMpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  auto hi = static_cast<unsigned long>(u >> 64);
  auto lo = static_cast<unsigned long>(u & 0xffffffffffffffffULL);
  mpz_class z = hi;
  z <<= 64;
  z += lo;
  return neg ? mpz_class(-z) : z;
}

mpz_class toMpz(std::int64_t v) { return toMpz(static_cast<i128>(v)); }

// |z| <= INT64_MAX
bool fitsSmall(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63; }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  setSmall(n, d);
}

Rational::Rational(const mpq_class& q) { setFromMpq(q); }

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = new mpq_class(*o.big_);
}

Rational::Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) {
  o.big_ = nullptr;
  o.num_ = 0;
  o.den_ = 1;
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    if (big_) {
      *big_ = *o.big_;
    } else {
      big_ = new mpq_class(*o.big_);
    }
  } else if (big_) {
    delete big_;
    big_ = nullptr;
  }
  return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
  if (this == &o) return *this;
  delete big_;
  num_ = o.num_;
  den_ = o.den_;
  big_ = o.big_;
  o.big_ = nullptr;
  o.num_ = 0;
  o.den_ = 1;
  return *this;
}

Rational::~Rational() { delete big_; }

void Rational::setSmall(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    d = 1;
  } else if (d != 1) {
    i128 g = gcd128(n, d);
    if (g != 1) {
      n /= g;
      d /= g;
    }
  }
  if (abs128(n) <= kMax && d <= kMax) {
    delete big_;
    big_ = nullptr;
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    return;
  }
  mpq_class q(toMpz(n), toMpz(d));
  q.canonicalize();
  setFromMpq(q);
}

void Rational::setFromMpq(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (fitsSmall(n) && fitsSmall(d)) {
    delete big_;
    big_ = nullptr;
    num_ = n.get_si();
    den_ = d.get_si();
    return;
  }
  if (big_) {
    *big_ = q;
  } else {
    big_ = new mpq_class(q);
  }
  num_ = 0;
  den_ = 1;
}

bool Rational::isInteger() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::toMpq() const {
  if (big_) return *big_;
  return mpq_class(toMpz(num_), toMpz(den_));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : toMpz(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : toMpz(den_); }

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
        num_ = s;
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    setSmall(n, d);
    return *this;
  }
  setFromMpq(toMpq() + o.toMpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s;
      if (!__builtin_sub_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
        num_ = s;
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    setSmall(n, d);
    return *this;
  }
  setFromMpq(toMpq() - o.toMpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(num_, o.num_, &p) && p != std::numeric_limits<std::int64_t>::min()) {
        num_ = p;
        return *this;
      }
    }
    setSmall(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
  }
  setFromMpq(toMpq() * o.toMpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw std::domain_error("Rational: division by zero");
  if (!big_ && !o.big_) {
    setSmall(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
  }
  setFromMpq(toMpq() / o.toMpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // small and big representations never coincide
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.toMpq() < b.toMpq();
}

Rational Rational::pow(int e) const {
  if (e < 0) return Rational(1) / pow(-e);
  Rational result(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Rational::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string numText(text.substr(0, slash));
  std::string denText = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  mpz_class n, d;
  if (numText.empty() || n.set_str(numText, 10) != 0 || denText.empty() || d.set_str(denText, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(str());
  auto h = static_cast<std::size_t>(num_) * 0x9e3779b97f4a7c15ULL;
  return h ^ (static_cast<std::size_t>(den_) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return Rational(0);
  mpz_class result;
  if (n >= 0) {
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    // binom(n, k) = (-1)^k binom(k - n - 1, k)
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    if (k % 2 != 0) result = -result;
  }
  return Rational(mpq_class(result));
}

}  // namespace yangian
