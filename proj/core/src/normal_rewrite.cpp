#include <map>
#include <stdexcept>

#include "algebra_impl.hpp"

namespace yangian {

namespace {

bool canAppend(LetterId last, LetterId x) { return last < x || (last == x && !letterParity(x)); }

}  // namespace

void Algebra::Impl::mulWLInto(const Word& w, LetterId x, const Rational& scale, PolyAccumulator& acc) {
  if (scale.isZero()) return;
  if (w.empty() || canAppend(w.back(), x)) {
    Word v = w;
    v.push(x);
    acc.add(v, scale);
    return;
  }
  acc.add(*memoWL(w, x), scale);
}

std::shared_ptr<const Poly> Algebra::Impl::memoWL(const Word& w, LetterId x) {
  MemoKey key{w, x};
  Shard& shard = shards[MemoHash{}(key) % kShards];
  {
    std::lock_guard<std::mutex> lock(shard.mu);
    auto it = shard.map.find(key);
    if (it != shard.map.end()) return it->second;
  }
  const LetterId y = w.back();
  const Word head = w.withoutLast();
  PolyAccumulator acc;
  acc.noteRank(idx.m());
  if (y == x) {
    // x odd: x x = (1/2)[x, x]
    mulWPInto(head, bracketLetters(x, x), Rational(1, 2), acc);
  } else {
    // ... y x = (-1)^{p(x)p(y)} ... x y + ... [y, x]
    PolyAccumulator first;
    first.noteRank(idx.m());
    mulWLInto(head, x, Rational(1), first);
    Poly moved = first.finish();
    const Rational sign = (letterParity(x) & letterParity(y)) ? Rational(-1) : Rational(1);
    for (const auto& t : moved.terms()) mulWLInto(t.word, y, sign * t.coef, acc);
    mulWPInto(head, bracketLetters(y, x), Rational(1), acc);
  }
  auto value = std::make_shared<const Poly>(acc.finish());
  std::lock_guard<std::mutex> lock(shard.mu);
  auto [it, inserted] = shard.map.try_emplace(std::move(key), value);
  return it->second;
}

void Algebra::Impl::mulWWInto(const Word& w, const Word& v, const Rational& scale, PolyAccumulator& acc) {
  if (scale.isZero()) return;
  if (v.empty()) {
    acc.add(w, scale);
    return;
  }
  if (w.empty() || canAppend(w.back(), v[0])) {
    acc.add(Word::concat(w, v), scale);
    return;
  }
  if (v.size() == 1) {
    mulWLInto(w, v[0], scale, acc);
    return;
  }
  Poly current = Poly::word(idx.m(), w);
  for (std::size_t k = 0; k + 1 < v.size(); ++k) current = mulPL(current, v[k]);
  for (const auto& t : current.terms()) mulWLInto(t.word, v.back(), scale * t.coef, acc);
}

void Algebra::Impl::mulWPInto(const Word& w, const Poly& q, const Rational& scale, PolyAccumulator& acc) {
  for (const auto& t : q.terms()) mulWWInto(w, t.word, scale * t.coef, acc);
}

Poly Algebra::Impl::mulPL(const Poly& p, LetterId x) {
  PolyAccumulator acc;
  acc.noteRank(idx.m());
  for (const auto& t : p.terms()) mulWLInto(t.word, x, t.coef, acc);
  return acc.finish();
}

Poly Algebra::Impl::mulPP(const Poly& a, const Poly& b) {
  if (a.isZero() || b.isZero()) return Poly{};
  if (a.isScalar()) return b * a.constantTerm();
  if (b.isScalar()) return a * b.constantTerm();
  PolyAccumulator acc;
  acc.noteRank(idx.m());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) mulWWInto(x.word, y.word, x.coef * y.coef, acc);
  }
  return acc.finish();
}

Poly Algebra::Impl::normalizeFast(const Poly& p) {
  PolyAccumulator acc;
  acc.noteRank(idx.m());
  for (const auto& t : p.terms()) {
    Poly current(Rational(1));
    for (LetterId x : t.word) {
      if (codec.isAllowed(x)) {
        current = mulPL(current, x);
      } else {
        current = mulPP(current, letterForm(x));
      }
      if (current.isZero()) break;
    }
    acc.add(current, t.coef);
  }
  return acc.finish();
}

// Textbook rewriting: pick a redex (leftmost or rightmost) in some reducible
// word and apply one rule. Words are processed largest-first so that each
// word is rewritten once per step.
Poly Algebra::Impl::normalizeRewrite(const Poly& p, bool leftmost) {
  std::map<Word, Rational, WordLess> pending;
  PolyAccumulator done;
  done.noteRank(idx.m());
  auto push = [&](const Word& w, const Rational& c) {
    if (c.isZero()) return;
    auto [it, inserted] = pending.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.isZero()) pending.erase(it);
    }
  };
  for (const auto& t : p.terms()) push(t.word, t.coef);

  auto splice = [&](const Word& w, std::size_t from, std::size_t to, const Poly& middle, const Rational& c) {
    const Word pre = w.slice(0, from);
    const Word post = w.slice(to, w.size());
    for (const auto& t : middle.terms()) {
      Word nw = pre;
      nw.append(t.word);
      nw.append(post);
      push(nw, c * t.coef);
    }
  };

  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = it->first;
    Rational c = it->second;
    pending.erase(it);

    // Redexes: forbidden letter at k (kind 0), or reducible pair (k, k+1) (kind 1).
    int chosen = -1;
    int kind = -1;
    auto consider = [&](int pos, int k) {
      if (chosen < 0 || (leftmost ? pos < chosen : pos > chosen)) {
        chosen = pos;
        kind = k;
      }
    };
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!codec.isAllowed(w[k])) {
        consider(static_cast<int>(k), 0);
      } else if (k + 1 < w.size() && codec.isAllowed(w[k + 1]) && !canAppend(w[k], w[k + 1])) {
        consider(static_cast<int>(k), 1);
      }
    }
    if (chosen < 0) {
      done.add(w, c);
      continue;
    }
    const auto pos = static_cast<std::size_t>(chosen);
    if (kind == 0) {
      splice(w, pos, pos + 1, letterForm(w[pos]), c);
      continue;
    }
    LetterId x = w[pos], y = w[pos + 1];
    if (x == y) {
      splice(w, pos, pos + 2, bracketLetters(x, x), c * Rational(1, 2));
      continue;
    }
    // x y -> (-1)^{p(x)p(y)} y x + [x, y]
    Word swapped;
    swapped.push(y);
    swapped.push(x);
    const Rational sign = (letterParity(x) & letterParity(y)) ? Rational(-1) : Rational(1);
    splice(w, pos, pos + 2, Poly::word(idx.m(), swapped, sign), c);
    splice(w, pos, pos + 2, bracketLetters(x, y), c);
  }
  return done.finish();
}

}  // namespace yangian
