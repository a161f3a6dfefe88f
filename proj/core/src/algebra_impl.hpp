#pragma once

#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "yangian/algebra.hpp"

namespace yangian {

struct Algebra::Impl {
  static constexpr int kMaxLevel = 64;

  struct Family {
    // Every entry c_{a,b} with a+b <= level is available.
    std::atomic<int> level{1};
    std::array<std::atomic<const std::vector<Poly>*>, kMaxLevel + 1> levels{};
    int growingLevel = 0;
  };

  struct MemoKey {
    Word word;
    LetterId letter;
    friend bool operator==(const MemoKey& a, const MemoKey& b) { return a.letter == b.letter && a.word == b.word; }
  };
  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
      return k.word.hash() ^ (static_cast<std::size_t>(k.letter) * 0xff51afd7ed558ccdULL);
    }
  };
  struct Shard {
    std::mutex mu;
    absl::flat_hash_map<MemoKey, std::shared_ptr<const Poly>, MemoHash> map;
  };
  static constexpr int kShards = 32;

  Impl(int m, AlgebraOptions o);
  ~Impl();

  IndexData idx;
  LetterCodec codec;
  AlgebraOptions opts;
  Rational kappa;
  int N;

  std::vector<std::unique_ptr<Family>> families;
  std::recursive_mutex grow;

  std::vector<std::atomic<const Poly*>> letterForms;
  std::vector<char> eliminating;
  // 1-based orders; Y[n] and Minv[n] are N*N row-major, guarded by `grow`.
  std::vector<std::vector<Poly>> Y;
  std::vector<std::vector<Poly>> Minv;

  std::array<Shard, kShards> shards;

  std::atomic<std::size_t> consistencyChecks{0};
  std::atomic<std::size_t> consistencyFailures{0};

  const Poly zero;
  const Poly one{Rational(1)};

  int familyIndex(int i, int j, int k, int l) const {
    return (((i - 1) * N + (j - 1)) * N + (k - 1)) * N + (l - 1);
  }

  const Poly& T(int p, int q, int r);
  const Poly& letterForm(LetterId id);
  const Poly& entry(int i, int j, int k, int l, int a, int b);
  const Poly& bracketLetters(LetterId y, LetterId x);
  void growFamily(int i, int j, int k, int l, int upto);
  Poly G(int i, int j, int k, int l, int x, int y);
  Poly computeElimination(const Letter& x);
  void ensureMinv(int n);
  void ensureY(int n);
  // Installs a fully-known family level (cache load).
  void installLevel(int fi, int level, std::vector<Poly> entries);

  // Normal-form products.
  void mulWLInto(const Word& w, LetterId x, const Rational& scale, PolyAccumulator& acc);
  void mulWWInto(const Word& w, const Word& v, const Rational& scale, PolyAccumulator& acc);
  void mulWPInto(const Word& w, const Poly& q, const Rational& scale, PolyAccumulator& acc);
  std::shared_ptr<const Poly> memoWL(const Word& w, LetterId x);
  Poly mulPL(const Poly& p, LetterId x);
  Poly mulPP(const Poly& a, const Poly& b);
  Poly normalizeFast(const Poly& p);
  Poly normalizeRewrite(const Poly& p, bool leftmost);
};

}  // namespace yangian
