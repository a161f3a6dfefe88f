#include "yangian/morphisms.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace yangian {

std::vector<Poly> rawCentralLetters(const Algebra& alg, int order) {
  FreeRing ring{alg.m()};
  auto T = tMatrix(alg, order, false);
  auto prod = ttraProduct(ring, alg.index(), T);
  std::vector<Poly> out;
  for (int r = 1; r <= order; ++r) out.push_back(prod(1, 1)[r]);
  return out;
}

namespace {

// (-1)^{C(n, 2)}: the Koszul sign of reversing n odd factors.
Rational reversalSign(int oddCount) { return ((oddCount * (oddCount - 1) / 2) & 1) ? Rational(-1) : Rational(1); }

}  // namespace

struct Morphism::Impl {
  const Algebra* alg;
  std::string name;
  bool anti;
  LetterMap tImage;
  mutable std::mutex mu;
  mutable std::unordered_map<LetterId, Poly> raw;
  mutable std::unordered_map<LetterId, Poly> normal;
  mutable std::vector<Poly> rawC;

  const Poly& rawImage(LetterId id) const {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = raw.find(id);
      if (it != raw.end()) return it->second;
    }
    const Letter x = alg->codec().decode(id);
    Poly value;
    if (x.isCentral()) {
      Poly expr;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (static_cast<int>(rawC.size()) < x.r) rawC = rawCentralLetters(*alg, x.r);
        expr = rawC[x.r - 1];
      }
      value = freeImage(expr);
    } else {
      value = tImage(x);
    }
    std::lock_guard<std::mutex> lock(mu);
    return raw.try_emplace(id, std::move(value)).first->second;
  }

  const Poly& normalImage(LetterId id) const {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = normal.find(id);
      if (it != normal.end()) return it->second;
    }
    Poly value = alg->normalize(rawImage(id));
    std::lock_guard<std::mutex> lock(mu);
    return normal.try_emplace(id, std::move(value)).first->second;
  }

  Poly freeImage(const Poly& p) const {
    PolyAccumulator acc;
    acc.noteRank(alg->m());
    for (const auto& t : p.terms()) {
      Poly cur(Rational(1));
      if (anti) {
        for (std::size_t k = t.word.size(); k-- > 0;) cur = multiply(cur, rawImage(t.word[k]));
        acc.add(cur, t.coef * reversalSign(t.word.oddCount()));
      } else {
        for (LetterId x : t.word) cur = multiply(cur, rawImage(x));
        acc.add(cur, t.coef);
      }
    }
    return acc.finish();
  }

  Poly normalApply(const Poly& p) const {
    PolyAccumulator acc;
    acc.noteRank(alg->m());
    for (const auto& t : p.terms()) {
      Poly cur(Rational(1));
      const std::size_t n = t.word.size();
      for (std::size_t k = 0; k < n && !cur.isZero(); ++k) {
        LetterId x = anti ? t.word[n - 1 - k] : t.word[k];
        cur = alg->mul(cur, normalImage(x));
      }
      acc.add(cur, anti ? t.coef * reversalSign(t.word.oddCount()) : t.coef);
    }
    return acc.finish();
  }
};

Morphism::Morphism(const Algebra& alg, std::string name, bool anti, LetterMap tImage)
    : impl_(std::make_unique<Impl>()) {
  impl_->alg = &alg;
  impl_->name = std::move(name);
  impl_->anti = anti;
  impl_->tImage = std::move(tImage);
}
Morphism::~Morphism() = default;
Morphism::Morphism(Morphism&&) noexcept = default;
Morphism& Morphism::operator=(Morphism&&) noexcept = default;

const std::string& Morphism::name() const noexcept { return impl_->name; }
bool Morphism::anti() const noexcept { return impl_->anti; }
const Algebra& Morphism::algebra() const noexcept { return *impl_->alg; }
const Poly& Morphism::letterImage(LetterId id) const { return impl_->rawImage(id); }
const Poly& Morphism::normalImage(LetterId id) const { return impl_->normalImage(id); }
Poly Morphism::applyFree(const Poly& p) const { return impl_->freeImage(p); }
Poly Morphism::apply(const Poly& p) const { return impl_->normalApply(p); }

PSeries Morphism::apply(const PSeries& s) const {
  PSeries out(s.order());
  for (int r = 0; r <= s.order(); ++r) out.at(r) = apply(s[r]);
  return out;
}

Morphism sigmaMorphism(const Algebra& alg) {
  const Algebra* a = &alg;
  return Morphism(alg, "sigma", false, [a](const Letter& x) {
    const auto& idx = a->index();
    const int sign = signOf(idx.bar(x.i) * idx.bar(x.j) + idx.bar(x.j));
    // [u^{-r}] (-u-1)^{-s} = (-1)^r binom(r-1, s-1)
    Poly out;
    for (int s = 1; s <= x.r; ++s) {
      Rational w = binomial(x.r - 1, s - 1) * Rational(signOf(x.r) * sign);
      out += w * a->t(x.j, x.i, s);
    }
    return out;
  });
}

Morphism tauMorphism(const Algebra& alg) {
  const Algebra* a = &alg;
  return Morphism(alg, "tau", true, [a](const Letter& x) {
    const auto& idx = a->index();
    const int sign = signOf(idx.bar(x.i) * idx.bar(x.j) + idx.bar(x.j));
    return Rational(sign) * a->t(x.j, x.i, x.r);
  });
}

Morphism muPhiMorphism(const Algebra& alg, std::vector<Rational> phi) {
  const Algebra* a = &alg;
  return Morphism(alg, "mu", false, [a, phi = std::move(phi)](const Letter& x) {
    Poly out = a->t(x.i, x.j, x.r);
    for (int k = 1; k <= x.r && k <= static_cast<int>(phi.size()); ++k) {
      out += phi[k - 1] * a->t(x.i, x.j, x.r - k);
    }
    return out;
  });
}

Morphism identityMorphism(const Algebra& alg) {
  const Algebra* a = &alg;
  return Morphism(alg, "identity", false, [a](const Letter& x) { return a->t(x.i, x.j, x.r); });
}

// ---- tensor square ----------------------------------------------------------

namespace {

struct PairLess {
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const noexcept {
    auto c = compareWords(a.first, b.first);
    if (c != 0) return c < 0;
    return compareWords(a.second, b.second) < 0;
  }
};

using TensorMap = std::map<std::pair<Word, Word>, Rational, PairLess>;

void addTo(TensorMap& acc, const Word& l, const Word& r, const Rational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = acc.try_emplace({l, r}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) acc.erase(it);
  }
}

TensorPoly finish(int m, TensorMap& acc) {
  std::vector<TensorTerm> terms;
  terms.reserve(acc.size());
  for (auto& [k, c] : acc) terms.push_back(TensorTerm{k.first, k.second, c});
  return TensorPoly::fromTerms(m, std::move(terms));
}

}  // namespace

TensorPoly::TensorPoly(Rational scalar) {
  if (!scalar.isZero()) terms_.push_back(TensorTerm{Word{}, Word{}, scalar});
}

TensorPoly TensorPoly::fromTerms(int m, std::vector<TensorTerm> terms) {
  TensorPoly out;
  out.m_ = m;
  out.terms_ = std::move(terms);
  return out;
}

TensorPoly TensorPoly::tensor(const Poly& a, const Poly& b) {
  TensorMap acc;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) addTo(acc, x.word, y.word, x.coef * y.coef);
  return finish(joinRank(a.m(), b.m()), acc);
}

TensorPoly TensorPoly::fromMixedWord(int m, const std::vector<std::pair<bool, LetterId>>& letters,
                                     const Rational& coef) {
  Word l, r;
  int sign = 0;
  int rightOdd = 0;
  for (const auto& [isRight, id] : letters) {
    if (isRight) {
      r.push(id);
      rightOdd += letterParity(id);
    } else {
      // moving this left letter past every right letter already seen
      sign ^= (letterParity(id) & rightOdd) & 1;
      l.push(id);
    }
  }
  TensorMap acc;
  addTo(acc, l, r, sign ? -coef : coef);
  return finish(m, acc);
}

TensorPoly TensorPoly::operator-() const {
  TensorPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

TensorPoly operator+(const TensorPoly& a, const TensorPoly& b) {
  TensorMap acc;
  for (const auto& t : a.terms()) addTo(acc, t.left, t.right, t.coef);
  for (const auto& t : b.terms()) addTo(acc, t.left, t.right, t.coef);
  return finish(joinRank(a.m(), b.m()), acc);
}

TensorPoly operator-(const TensorPoly& a, const TensorPoly& b) { return a + (-b); }

TensorPoly operator*(const Rational& q, const TensorPoly& a) {
  if (q.isZero()) return TensorPoly{};
  TensorPoly out = a;
  for (auto& t : out.terms_) t.coef *= q;
  return out;
}

bool operator==(const TensorPoly& a, const TensorPoly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& x = a.terms_[k];
    const auto& y = b.terms_[k];
    if (x.left != y.left || x.right != y.right || x.coef != y.coef) return false;
  }
  return true;
}

TensorPoly multiplyFree(const TensorPoly& x, const TensorPoly& y) {
  TensorMap acc;
  for (const auto& a : x.terms()) {
    for (const auto& b : y.terms()) {
      Rational c = a.coef * b.coef;
      if (a.right.parity() & b.left.parity()) c = -c;
      addTo(acc, Word::concat(a.left, b.left), Word::concat(a.right, b.right), c);
    }
  }
  return finish(joinRank(x.m(), y.m()), acc);
}

TensorPoly tensorNormalize(const Algebra& alg, const TensorPoly& x) {
  TensorMap acc;
  for (const auto& t : x.terms()) {
    Poly l = alg.normalize(Poly::word(alg.m(), t.left));
    Poly r = alg.normalize(Poly::word(alg.m(), t.right));
    for (const auto& a : l.terms())
      for (const auto& b : r.terms()) addTo(acc, a.word, b.word, t.coef * a.coef * b.coef);
  }
  return finish(alg.m(), acc);
}

std::string formatTensor(const LetterCodec& codec, const TensorPoly& x) {
  if (x.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << t.coef.str() << " (" << (t.left.empty() ? "1" : formatWord(codec, t.left)) << ") (x) ("
       << (t.right.empty() ? "1" : formatWord(codec, t.right)) << ")";
  }
  return os.str();
}

TensorPoly TensorRing::mul(const TensorPoly& x, const TensorPoly& y) const {
  if (x.isZero() || y.isZero()) return TensorPoly{};
  TensorMap acc;
  for (const auto& a : x.terms()) {
    for (const auto& b : y.terms()) {
      Rational c = a.coef * b.coef;
      if (a.right.parity() & b.left.parity()) c = -c;
      Poly l = alg->mulWords(a.left, b.left);
      if (l.isZero()) continue;
      Poly r = alg->mulWords(a.right, b.right);
      for (const auto& p : l.terms())
        for (const auto& q : r.terms()) addTo(acc, p.word, q.word, c * p.coef * q.coef);
    }
  }
  return finish(alg->m(), acc);
}

std::pair<TensorPoly, TensorPoly> TensorRing::split(const TensorPoly& a) const {
  std::vector<TensorTerm> even, odd;
  for (const auto& t : a.terms()) ((t.left.parity() ^ t.right.parity()) ? odd : even).push_back(t);
  return {TensorPoly::fromTerms(a.m(), std::move(even)), TensorPoly::fromTerms(a.m(), std::move(odd))};
}

int TensorRing::parity(const TensorPoly& a) const {
  auto [even, odd] = split(a);
  if (odd.isZero()) return 0;
  return even.isZero() ? 1 : -1;
}

TensorPoly TensorRing::bracket(const TensorPoly& a, const TensorPoly& b) const {
  auto [a0, a1] = split(a);
  auto [b0, b1] = split(b);
  return mul(a, b) - mul(b0, a) - mul(b1, a0) + mul(b1, a1);
}

TensorPoly TensorRing::sum(std::vector<TensorPoly>& parts) const {
  if (parts.empty()) return TensorPoly{};
  TensorMap acc;
  int m = 0;
  for (const auto& p : parts) {
    m = joinRank(m, p.m());
    for (const auto& t : p.terms()) addTo(acc, t.left, t.right, t.coef);
  }
  return finish(m, acc);
}

TSeries tensorSeries(const PSeries& a, const PSeries& b) {
  TSeries out(std::min(a.order(), b.order()));
  for (int r = 0; r <= out.order(); ++r) {
    TensorPoly acc;
    for (int k = 0; k <= r; ++k) {
      if (a[k].isZero() || b[r - k].isZero()) continue;
      acc = acc + TensorPoly::tensor(a[k], b[r - k]);
    }
    out.at(r) = acc;
  }
  return out;
}

struct Coproduct::Impl {
  const Algebra* alg;
  TensorRing ring;
  mutable std::mutex mu;
  mutable std::unordered_map<LetterId, TensorPoly> images;
};

Coproduct::Coproduct(const Algebra& alg) : impl_(std::make_unique<Impl>()) {
  impl_->alg = &alg;
  impl_->ring = TensorRing{&alg};
}
Coproduct::~Coproduct() = default;

const TensorRing& Coproduct::ring() const noexcept { return impl_->ring; }

const TensorPoly& Coproduct::letterImage(LetterId id) const {
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->images.find(id);
    if (it != impl_->images.end()) return it->second;
  }
  const Algebra& alg = *impl_->alg;
  const Letter x = alg.codec().decode(id);
  TensorPoly value;
  if (x.isCentral()) {
    for (int a = 0; a <= x.r; ++a) {
      Poly l = a == 0 ? Poly(Rational(1)) : alg.c(a);
      Poly r = x.r - a == 0 ? Poly(Rational(1)) : alg.c(x.r - a);
      value = value + TensorPoly::tensor(l, r);
    }
  } else {
    const int n = alg.index().N();
    for (int k = 1; k <= n; ++k) {
      for (int a = 0; a <= x.r; ++a) {
        const Poly& l = alg.tNormal(x.i, k, a);
        if (l.isZero()) continue;
        const Poly& r = alg.tNormal(k, x.j, x.r - a);
        if (r.isZero()) continue;
        value = value + TensorPoly::tensor(l, r);
      }
    }
  }
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->images.try_emplace(id, std::move(value)).first->second;
}

TensorPoly Coproduct::apply(const Poly& p) const {
  std::vector<TensorPoly> parts;
  for (const auto& t : p.terms()) {
    TensorPoly cur(Rational(1));
    for (LetterId x : t.word) {
      cur = impl_->ring.mul(cur, letterImage(x));
      if (cur.isZero()) break;
    }
    parts.push_back(t.coef * cur);
  }
  return impl_->ring.sum(parts);
}

TSeries Coproduct::apply(const PSeries& s) const {
  TSeries out(s.order());
  for (int r = 0; r <= s.order(); ++r) out.at(r) = apply(s[r]);
  return out;
}

}  // namespace yangian
