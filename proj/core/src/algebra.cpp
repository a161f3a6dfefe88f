#include <algorithm>
#include <stdexcept>
#include <string>

#include "algebra_impl.hpp"

namespace yangian {

namespace {

constexpr std::size_t kLetterSlots = 1u << 16;

}  // namespace

Algebra::Impl::Impl(int m, AlgebraOptions o)
    : idx(m), codec(m), opts(std::move(o)), kappa(idx.kappa()), N(idx.N()), letterForms(kLetterSlots),
      eliminating(kLetterSlots, 0) {
  families.reserve(static_cast<std::size_t>(N) * N * N * N);
  for (int f = 0; f < N * N * N * N; ++f) families.push_back(std::make_unique<Family>());
  Minv.push_back({});
  Minv[0].resize(static_cast<std::size_t>(N) * N);
  for (int p = 0; p < N; ++p) Minv[0][p * N + p] = Poly(Rational(1));
  Y.push_back({});
}

Algebra::Impl::~Impl() {
  for (auto& fam : families) {
    for (auto& lvl : fam->levels) delete lvl.load();
  }
  for (auto& p : letterForms) delete p.load();
}

const Poly& Algebra::Impl::T(int p, int q, int r) {
  if (r < 0) return zero;
  if (r == 0) return p == q ? one : zero;
  return letterForm(codec.t(p, q, r));
}

const Poly& Algebra::Impl::letterForm(LetterId id) {
  if (const Poly* p = letterForms[id].load(std::memory_order_acquire)) return *p;
  if (codec.isAllowed(id)) {
    auto* fresh = new Poly(Poly::letter(codec, id));
    const Poly* expected = nullptr;
    if (!letterForms[id].compare_exchange_strong(expected, fresh, std::memory_order_acq_rel)) {
      delete fresh;
      return *expected;
    }
    return *fresh;
  }
  std::lock_guard<std::recursive_mutex> lock(grow);
  if (const Poly* p = letterForms[id].load(std::memory_order_acquire)) return *p;
  if (eliminating[id]) throw std::logic_error("cyclic elimination of " + codec.format(id));
  eliminating[id] = 1;
  auto* fresh = new Poly(computeElimination(codec.decode(id)));
  eliminating[id] = 0;
  letterForms[id].store(fresh, std::memory_order_release);
  return *fresh;
}

const Poly& Algebra::Impl::entry(int i, int j, int k, int l, int a, int b) {
  if (a < 1 || b < 1) return zero;
  int L = a + b;
  if (L > kMaxLevel) throw std::out_of_range("table level exceeds supported range");
  Family& fam = *families[familyIndex(i, j, k, l)];
  if (fam.level.load(std::memory_order_acquire) < L) growFamily(i, j, k, l, L);
  return (*fam.levels[L].load(std::memory_order_acquire))[a - 1];
}

const Poly& Algebra::Impl::bracketLetters(LetterId y, LetterId x) {
  if (letterIsCentral(x) || letterIsCentral(y)) return zero;
  Letter Y = codec.decode(y);
  Letter X = codec.decode(x);
  return entry(Y.i, Y.j, X.i, X.j, Y.r, X.r);
}

Poly Algebra::Impl::G(int i, int j, int k, int l, int x, int y) {
  PolyAccumulator acc;
  acc.noteRank(idx.m());
  const int bi = idx.bar(i), bj = idx.bar(j), bk = idx.bar(k);
  const Rational s1 = signOf(bi * bj + bi * bk + bj * bk);

  auto addB = [&](int a, int b, const Rational& coef) {
    if (a < 0 || b < 0 || coef.isZero()) return;
    acc.add(mulPP(T(k, j, a), T(i, l, b)), coef);
    acc.add(mulPP(T(k, j, b), T(i, l, a)), -coef);
  };
  addB(x + 1, y, s1);
  addB(x, y + 1, -s1);
  addB(x, y, -s1 * kappa);

  const bool firstQ = k == idx.prime(i);
  const bool secondQ = l == idx.prime(j);
  auto addQ = [&](int a, int b, const Rational& coef) {
    if (a < 0 || b < 0) return;
    for (int p = 1; p <= N; ++p) {
      int pp = idx.prime(p);
      if (firstQ) {
        int s2 = signOf(bi + bi * bj + bj * idx.bar(p)) * idx.theta(i) * idx.theta(p);
        acc.add(mulPP(T(p, j, a), T(pp, l, b)), coef * s2);
      }
      if (secondQ) {
        int s3 = signOf(bi * bk + bj * bk + bi * idx.bar(p)) * idx.theta(idx.prime(j)) * idx.theta(pp);
        acc.add(mulPP(T(k, pp, b), T(i, p, a)), -coef * s3);
      }
    }
  };
  if (firstQ || secondQ) {
    addQ(x + 1, y, Rational(-1));
    addQ(x, y + 1, Rational(1));
  }
  return acc.finish();
}

void Algebra::Impl::growFamily(int i, int j, int k, int l, int upto) {
  std::lock_guard<std::recursive_mutex> lock(grow);
  const int fi = familyIndex(i, j, k, l);
  Family& fam = *families[fi];
  for (int L = fam.level.load(std::memory_order_acquire) + 1; L <= upto; ++L) {
    if (fam.growingLevel != 0) {
      throw std::logic_error("table recursion re-entered family at level " + std::to_string(L));
    }
    fam.growingLevel = L;
    auto* current = new std::vector<Poly>(static_cast<std::size_t>(L - 1));
    auto c = [&](int a, int b) -> Poly {
      if (a < 1 || b < 1) return Poly{};
      if (a + b == L) return (*current)[a - 1];
      return (*fam.levels[a + b].load(std::memory_order_acquire))[a - 1];
    };
    for (int a = 1; a <= L - 1; ++a) {
      int b = L - a;
      PolyAccumulator acc;
      acc.noteRank(idx.m());
      acc.add(G(i, j, k, l, a - 2, b));
      acc.add(c(a - 1, b + 1), Rational(2));
      acc.add(c(a - 2, b + 2), Rational(-1));
      acc.add(c(a - 1, b), kappa);
      acc.add(c(a - 2, b + 1), -kappa);
      Poly value = acc.finish();
      if (value.maxDegree() > L - 1) consistencyFailures.fetch_add(1);
      if (opts.flipSign && *opts.flipSign == TableKey{i, j, k, l, a, b}) value = -value;
      (*current)[a - 1] = std::move(value);
    }
    fam.levels[L].store(current, std::memory_order_release);
    fam.level.store(L, std::memory_order_release);
    fam.growingLevel = 0;

    if (opts.checkConsistency) {
      // Rows v^0, v^1, v^2 of the multiplied-through identity are not used by
      // the solve; they must vanish on their own.
      for (int y = 0; y >= -2; --y) {
        int x = L - 2 - y;
        PolyAccumulator acc;
        acc.noteRank(idx.m());
        acc.add(c(x + 2, y));
        acc.add(c(x + 1, y + 1), Rational(-2));
        acc.add(c(x, y + 2));
        acc.add(c(x + 1, y), -kappa);
        acc.add(c(x, y + 1), kappa);
        acc.add(G(i, j, k, l, x, y), Rational(-1));
        consistencyChecks.fetch_add(1);
        if (!acc.finish().isZero()) consistencyFailures.fetch_add(1);
      }
    }
  }
}

void Algebra::Impl::installLevel(int fi, int level, std::vector<Poly> entries) {
  Family& fam = *families[fi];
  fam.levels[level].store(new std::vector<Poly>(std::move(entries)), std::memory_order_release);
  fam.level.store(level, std::memory_order_release);
}

void Algebra::Impl::ensureY(int n) {
  while (static_cast<int>(Y.size()) <= n) {
    int q = static_cast<int>(Y.size());
    std::vector<Poly> mat(static_cast<std::size_t>(N) * N);
    const Rational minusKappa = -kappa;
    for (int p = 1; p <= N; ++p) {
      for (int s = 1; s <= N; ++s) {
        PolyAccumulator acc;
        acc.noteRank(idx.m());
        // (u - kappa)^{-e} = sum_k binom(-e, k) (-kappa)^k u^{-e-k}
        for (int e = 1; e <= q; ++e) acc.add(T(p, s, e), binomial(-e, q - e) * minusKappa.pow(q - e));
        mat[(p - 1) * N + (s - 1)] = acc.finish();
      }
    }
    Y.push_back(std::move(mat));
  }
}

void Algebra::Impl::ensureMinv(int n) {
  while (static_cast<int>(Minv.size()) <= n) {
    int q = static_cast<int>(Minv.size());
    ensureY(q);
    std::vector<Poly> mat(static_cast<std::size_t>(N) * N);
    for (int p = 0; p < N; ++p) {
      for (int j = 0; j < N; ++j) {
        PolyAccumulator acc;
        acc.noteRank(idx.m());
        for (int k = 1; k <= q; ++k) {
          for (int s = 0; s < N; ++s) {
            const Poly& a = Y[k][p * N + s];
            const Poly& b = Minv[q - k][s * N + j];
            if (a.isZero() || b.isZero()) continue;
            acc.add(mulPP(a, b), Rational(-1));
          }
        }
        mat[p * N + j] = acc.finish();
      }
    }
    Minv.push_back(std::move(mat));
  }
}

Poly Algebra::Impl::computeElimination(const Letter& x) {
  const int a = x.i, b = x.j, r = x.r;
  const int i = idx.prime(b), j = idx.prime(a);
  const int s = idx.transposeSign(i, j);
  ensureMinv(r - 1);
  ensureY(r - 1);

  // t_{j'i'}(u) s = c(u) (T(u-kappa)^{-1})_{ij}; the order-r coefficient minus
  // its single superscript-r letter is REST.
  PolyAccumulator rest;
  rest.noteRank(idx.m());
  for (int q = 1; q <= r; ++q) {
    const Poly& mq = Minv[r - q][(i - 1) * N + (j - 1)];
    if (!mq.isZero()) rest.add(mulPP(Poly::letter(codec, codec.c(q)), mq));
  }
  const Rational minusKappa = -kappa;
  for (int e = 1; e < r; ++e) rest.add(T(i, j, e), -(binomial(-e, r - e) * minusKappa.pow(r - e)));
  for (int k = 1; k < r; ++k) {
    for (int p = 1; p <= N; ++p) {
      const Poly& ya = Y[k][(i - 1) * N + (p - 1)];
      const Poly& mb = Minv[r - k][(p - 1) * N + (j - 1)];
      if (ya.isZero() || mb.isZero()) continue;
      rest.add(mulPP(ya, mb), Rational(-1));
    }
  }
  Poly restPoly = rest.finish();
  if (i == a && j == b) {
    if (s != 1) throw std::logic_error("degenerate elimination sign");
    return restPoly * Rational(1, 2);
  }
  LetterId top = codec.t(i, j, r);
  if (!codec.isAllowed(top)) throw std::logic_error("elimination produced a forbidden leading letter");
  return Rational(s) * restPoly - Poly::letter(codec, top, Rational(s));
}

// ---- public interface -----------------------------------------------------

Algebra::Algebra(int m, AlgebraOptions options) : impl_(std::make_unique<Impl>(m, std::move(options))) {}
Algebra::~Algebra() = default;

int Algebra::m() const noexcept { return impl_->idx.m(); }
const IndexData& Algebra::index() const noexcept { return impl_->idx; }
const LetterCodec& Algebra::codec() const noexcept { return impl_->codec; }
Rational Algebra::kappa() const { return impl_->kappa; }
const AlgebraOptions& Algebra::options() const noexcept { return impl_->opts; }

Poly Algebra::t(int i, int j, int r) const {
  if (r < 0) return Poly{};
  if (r == 0) return i == j ? Poly(Rational(1)) : Poly{};
  return Poly::letter(impl_->codec, impl_->codec.t(i, j, r));
}

Poly Algebra::c(int r) const {
  if (r < 0) return Poly{};
  if (r == 0) return Poly(Rational(1));
  return Poly::letter(impl_->codec, impl_->codec.c(r));
}

const Poly& Algebra::tNormal(int i, int j, int r) const { return impl_->T(i, j, r); }

const Poly& Algebra::commutatorTable(int i, int j, int k, int l, int r, int s) const {
  const auto& idx = impl_->idx;
  if (!idx.inRange(i) || !idx.inRange(j) || !idx.inRange(k) || !idx.inRange(l) || r < 1 || s < 1) {
    throw std::out_of_range("commutatorTable: index out of range");
  }
  return impl_->entry(i, j, k, l, r, s);
}

Poly Algebra::eliminateForbidden(const Letter& x) const {
  if (x.isCentral() || impl_->idx.allowed(x.i, x.j)) {
    throw std::invalid_argument("eliminateForbidden: letter is already allowed");
  }
  return impl_->letterForm(impl_->codec.encode(x));
}

Poly Algebra::normalize(const Poly& p, Strategy strategy) const {
  joinRank(p.m(), m());
  switch (strategy) {
    case Strategy::Fast:
      return impl_->normalizeFast(p);
    case Strategy::LeftmostFirst:
      return impl_->normalizeRewrite(p, true);
    case Strategy::RightmostFirst:
      return impl_->normalizeRewrite(p, false);
  }
  return impl_->normalizeFast(p);
}

bool Algebra::isZero(const Poly& p) const { return normalize(p).isZero(); }

Poly Algebra::mul(const Poly& a, const Poly& b) const {
  joinRank(joinRank(a.m(), b.m()), m());
  return impl_->mulPP(a, b);
}

Poly Algebra::mulWords(const Word& a, const Word& b) const {
  PolyAccumulator acc;
  acc.noteRank(m());
  impl_->mulWWInto(a, b, Rational(1), acc);
  return acc.finish();
}

Poly Algebra::bracket(const Poly& a, const Poly& b) const {
  auto pa = parityOf(a);
  auto pb = parityOf(b);
  Poly r = mul(a, b);
  r -= mul(pb.even, a);
  r -= mul(pb.odd, pa.even);
  r += mul(pb.odd, pa.odd);
  return r;
}

Poly Algebra::anticommutator(const Poly& a, const Poly& b) const { return mul(a, b) + mul(b, a); }

bool Algebra::isNormalWord(const Word& w) const {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!impl_->codec.isAllowed(w[k])) return false;
    if (k > 0) {
      if (w[k - 1] > w[k]) return false;
      if (w[k - 1] == w[k] && letterParity(w[k])) return false;
    }
  }
  return true;
}

std::vector<Word> Algebra::enumerateNormalWords(int d) const {
  if (d < 0) throw std::invalid_argument("enumerateNormalWords: negative degree");
  std::vector<LetterId> alphabet;
  const auto& codec = impl_->codec;
  const auto& idx = impl_->idx;
  for (int r = 1; r <= d; ++r) {
    alphabet.push_back(codec.c(r));
    for (int i = 1; i <= idx.N(); ++i) {
      for (int j = 1; j <= idx.N(); ++j) {
        if (idx.allowed(i, j)) alphabet.push_back(codec.t(i, j, r));
      }
    }
  }
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<Word> out;
  Word current;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t a = from; a < alphabet.size(); ++a) {
      LetterId x = alphabet[a];
      int deg = letterDegree(x);
      if (deg > remaining) continue;
      current.push(x);
      dfs(letterParity(x) ? a + 1 : a, remaining - deg);
      current.pop();
    }
  };
  dfs(0, d);
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

void Algebra::prepare(int level) const {
  const auto& idx = impl_->idx;
  for (int i = 1; i <= idx.N(); ++i)
    for (int j = 1; j <= idx.N(); ++j)
      for (int k = 1; k <= idx.N(); ++k)
        for (int l = 1; l <= idx.N(); ++l) {
          if (!idx.allowed(i, j) || !idx.allowed(k, l)) continue;
          Impl::Family& fam = *impl_->families[impl_->familyIndex(i, j, k, l)];
          if (fam.level.load(std::memory_order_acquire) < level) impl_->growFamily(i, j, k, l, level);
        }
}

std::size_t Algebra::consistencyChecks() const { return impl_->consistencyChecks.load(); }
std::size_t Algebra::consistencyFailures() const { return impl_->consistencyFailures.load(); }

std::size_t Algebra::tableEntryCount() const {
  std::size_t n = 0;
  for (const auto& fam : impl_->families) {
    int L = fam->level.load(std::memory_order_acquire);
    n += static_cast<std::size_t>(L) * (L - 1) / 2;
  }
  return n;
}

void Algebra::forEachEntry(const std::function<void(const TableKey&, const Poly&)>& fn) const {
  const int N = impl_->N;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          const auto& fam = *impl_->families[impl_->familyIndex(i, j, k, l)];
          int level = fam.level.load(std::memory_order_acquire);
          for (int a = 1; a < level; ++a) {
            for (int b = 1; a + b <= level; ++b) {
              fn(TableKey{i, j, k, l, a, b}, (*fam.levels[a + b].load(std::memory_order_acquire))[a - 1]);
            }
          }
        }
}

}  // namespace yangian
