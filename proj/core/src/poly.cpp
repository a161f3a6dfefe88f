#include "yangian/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <absl/container/flat_hash_map.h>

namespace yangian {

// ---- letters --------------------------------------------------------------

LetterId LetterCodec::encode(const Letter& x) const {
  if (x.r < 1 || x.r > kMaxSuperscript) throw std::out_of_range("letter superscript out of range");
  if (x.isCentral()) return static_cast<LetterId>(x.r << 8);
  if (!idx_.inRange(x.i) || !idx_.inRange(x.j)) throw std::out_of_range("letter index out of range");
  int slot = 1 + (x.i - 1) * idx_.N() + (x.j - 1);
  return static_cast<LetterId>((x.r << 8) | (slot << 1) | idx_.parity(x.i, x.j));
}

Letter LetterCodec::decode(LetterId id) const {
  int slot = letterSlot(id);
  if (slot == 0) return Letter::c(letterDegree(id));
  int k = slot - 1;
  return Letter::t(k / idx_.N() + 1, k % idx_.N() + 1, letterDegree(id));
}

bool LetterCodec::isAllowed(LetterId id) const {
  if (letterIsCentral(id)) return true;
  Letter x = decode(id);
  return idx_.allowed(x.i, x.j);
}

std::string LetterCodec::format(LetterId id) const {
  Letter x = decode(id);
  if (x.isCentral()) return "c[" + std::to_string(x.r) + "]";
  return "t[" + std::to_string(x.i) + "," + std::to_string(x.j) + "," + std::to_string(x.r) + "]";
}

namespace {

std::vector<int> parseInts(std::string_view body) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    int v = 0;
    auto piece = body.substr(pos, comma - pos);
    auto res = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (res.ec != std::errc() || res.ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("malformed integer list '" + std::string(body) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

LetterId LetterCodec::parse(std::string_view text) const {
  if (text.size() < 4 || text[1] != '[' || text.back() != ']') {
    throw std::invalid_argument("malformed letter '" + std::string(text) + "'");
  }
  auto vals = parseInts(text.substr(2, text.size() - 3));
  if (text[0] == 'c' && vals.size() == 1) return c(vals[0]);
  if (text[0] == 't' && vals.size() == 3) return t(vals[0], vals[1], vals[2]);
  throw std::invalid_argument("malformed letter '" + std::string(text) + "'");
}

// ---- words ----------------------------------------------------------------

Word Word::slice(std::size_t from, std::size_t to) const {
  Word w;
  for (std::size_t k = from; k < to; ++k) w.push(ids_[k]);
  return w;
}

void Word::append(const Word& other) {
  if (len_ + other.len_ > kCapacity) throw std::length_error("Word: capacity exceeded");
  std::memcpy(ids_.data() + len_, other.ids_.data(), other.len_ * sizeof(LetterId));
  len_ = static_cast<std::uint8_t>(len_ + other.len_);
  deg_ = static_cast<std::uint8_t>(deg_ + other.deg_);
  par_ ^= other.par_;
}

int Word::oddCount() const noexcept {
  int n = 0;
  for (std::size_t k = 0; k < len_; ++k) n += letterParity(ids_[k]);
  return n;
}

std::size_t Word::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ len_;
  for (std::size_t k = 0; k < len_; ++k) {
    h ^= ids_[k];
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h * 0x9e3779b97f4a7c15ULL);
}

std::string formatWord(const LetterCodec& codec, const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += codec.format(w[k]);
  }
  return out;
}

Word parseWord(const LetterCodec& codec, std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    w.push(codec.parse(text.substr(pos, end - pos)));
    pos = end;
  }
  return w;
}

// ---- polys ----------------------------------------------------------------

int joinRank(int a, int b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::invalid_argument("mixing letters of different rank m=" + std::to_string(a) + " and m=" +
                              std::to_string(b));
}

Poly::Poly(Rational scalar) {
  if (!scalar.isZero()) terms_.push_back(Term{Word{}, std::move(scalar)});
}

Poly Poly::letter(const LetterCodec& codec, LetterId id, Rational coef) {
  Poly p;
  p.m_ = codec.m();
  if (!coef.isZero()) p.terms_.push_back(Term{Word(id), std::move(coef)});
  return p;
}

Poly Poly::word(int m, const Word& w, Rational coef) {
  Poly p;
  p.m_ = w.empty() ? 0 : m;
  if (!coef.isZero()) p.terms_.push_back(Term{w, std::move(coef)});
  return p;
}

Poly Poly::fromSorted(int m, std::vector<Term> terms) {
  Poly p;
  p.m_ = m;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::isScalar() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].word.empty()); }

Rational Poly::constantTerm() const {
  if (!terms_.empty() && terms_[0].word.empty()) return terms_[0].coef;
  return Rational(0);
}

Rational Poly::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& x) { return compareWords(t.word, x) < 0; });
  if (it != terms_.end() && it->word == w) return it->coef;
  return Rational(0);
}

int Poly::maxDegree() const noexcept { return terms_.empty() ? -1 : terms_.back().word.degree(); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

Poly mergeCombine(const Poly& a, const Poly& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && compareWords(ia->word, ib->word) < 0)) {
      out.push_back(*ia++);
    } else if (ia == ea || compareWords(ib->word, ia->word) < 0) {
      out.push_back(Term{ib->word, subtract ? -ib->coef : ib->coef});
      ++ib;
    } else {
      Rational c = subtract ? ia->coef - ib->coef : ia->coef + ib->coef;
      if (!c.isZero()) out.push_back(Term{ia->word, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return Poly::fromSorted(joinRank(a.m(), b.m()), std::move(out));
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.isZero()) return *this;
  if (isZero()) {
    int m = joinRank(m_, o.m_);
    *this = o;
    m_ = m;
    return *this;
  }
  *this = mergeCombine(*this, o, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.isZero()) return *this;
  *this = mergeCombine(*this, o, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& q) {
  if (q.isZero()) {
    terms_.clear();
    return *this;
  }
  if (q.isOne()) return *this;
  for (auto& t : terms_) t.coef *= q;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].word != b.terms_[k].word || a.terms_[k].coef != b.terms_[k].coef) return false;
  }
  return true;
}

struct PolyAccumulator::Impl {
  absl::flat_hash_map<Word, Rational, WordHash> map;
};

PolyAccumulator::PolyAccumulator() : impl_(std::make_unique<Impl>()) {}
PolyAccumulator::~PolyAccumulator() = default;
PolyAccumulator::PolyAccumulator(PolyAccumulator&&) noexcept = default;
PolyAccumulator& PolyAccumulator::operator=(PolyAccumulator&&) noexcept = default;

void PolyAccumulator::add(const Word& w, const Rational& coef) {
  if (coef.isZero()) return;
  auto [it, inserted] = impl_->map.try_emplace(w, coef);
  if (!inserted) it->second += coef;
}

void PolyAccumulator::add(const Poly& p, const Rational& scale) {
  if (scale.isZero() || p.isZero()) return;
  noteRank(p.m());
  if (scale.isOne()) {
    for (const auto& t : p.terms()) add(t.word, t.coef);
  } else {
    for (const auto& t : p.terms()) add(t.word, t.coef * scale);
  }
}

bool PolyAccumulator::empty() const { return impl_->map.empty(); }

Poly PolyAccumulator::finish() {
  std::vector<Term> terms;
  terms.reserve(impl_->map.size());
  for (auto& [w, c] : impl_->map) {
    if (!c.isZero()) terms.push_back(Term{w, std::move(c)});
  }
  impl_->map.clear();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compareWords(a.word, b.word) < 0; });
  bool anyLetters = std::any_of(terms.begin(), terms.end(), [](const Term& t) { return !t.word.empty(); });
  return Poly::fromSorted(anyLetters ? m_ : 0, std::move(terms));
}

ParityParts parityOf(const Poly& p) {
  std::vector<Term> even, odd;
  for (const auto& t : p.terms()) (t.word.parity() ? odd : even).push_back(t);
  return ParityParts{Poly::fromSorted(p.m(), std::move(even)), Poly::fromSorted(p.m(), std::move(odd))};
}

int homogeneousParity(const Poly& p) {
  if (p.isZero()) return 0;
  int par = p.terms()[0].word.parity();
  for (const auto& t : p.terms()) {
    if (t.word.parity() != par) return -1;
  }
  return par;
}

Poly multiply(const Poly& a, const Poly& b) {
  PolyAccumulator acc;
  acc.noteRank(joinRank(a.m(), b.m()));
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) acc.add(Word::concat(x.word, y.word), x.coef * y.coef);
  }
  return acc.finish();
}

Poly superCommutator(const Poly& a, const Poly& b) {
  auto pa = parityOf(a);
  auto pb = parityOf(b);
  // ab - (b0 a + b1 a0 - b1 a1)
  Poly r = multiply(a, b);
  r -= multiply(pb.even, a);
  r -= multiply(pb.odd, pa.even);
  r += multiply(pb.odd, pa.odd);
  return r;
}

Poly antiCommutator(const Poly& a, const Poly& b) { return multiply(a, b) + multiply(b, a); }

std::string formatPoly(const LetterCodec& codec, const Poly& p) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += t.coef.str();
    if (!t.word.empty()) {
      out += ' ';
      out += formatWord(codec, t.word);
    }
  }
  return out;
}

Poly parsePoly(const LetterCodec& codec, std::string_view text) {
  if (text == "0") return Poly{};
  PolyAccumulator acc;
  acc.noteRank(codec.m());
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t sep = text.find(" + ", pos);
    if (sep == std::string_view::npos) sep = text.size();
    auto piece = text.substr(pos, sep - pos);
    std::size_t space = piece.find(' ');
    Rational coef = Rational::parse(piece.substr(0, space));
    Word w = space == std::string_view::npos ? Word{} : parseWord(codec, piece.substr(space + 1));
    acc.add(w, coef);
    pos = sep + 3;
  }
  return acc.finish();
}

}  // namespace yangian
