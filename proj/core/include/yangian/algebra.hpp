#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "yangian/poly.hpp"

namespace yangian {

enum class Strategy { Fast, LeftmostFirst, RightmostFirst };

struct TableKey {
  int i = 0, j = 0, k = 0, l = 0, r = 0, s = 0;
  friend bool operator==(const TableKey&, const TableKey&) = default;
};

struct AlgebraOptions {
  // Verify the overdetermined rows of the table recursion as entries are generated.
  bool checkConsistency = true;
  // Test fixture: negate this stored table entry after it is generated.
  std::optional<TableKey> flipSign;
};

// The extended Yangian X(osp(1|2m)) in PBW normal form. Table entries,
// eliminations and products are memoized; all methods are safe to call from
// several threads.
class Algebra {
 public:
  explicit Algebra(int m, AlgebraOptions options = {});
  ~Algebra();
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  int m() const noexcept;
  const IndexData& index() const noexcept;
  const LetterCodec& codec() const noexcept;
  Rational kappa() const;
  const AlgebraOptions& options() const noexcept;

  // Raw letters; t(i, j, 0) is delta_ij.
  Poly t(int i, int j, int r) const;
  Poly c(int r) const;
  // Normal form of t_ij^(r); r = 0 gives delta_ij, r < 0 gives zero.
  const Poly& tNormal(int i, int j, int r) const;

  // [t_ij^(r), t_kl^(s)] in normal form.
  const Poly& commutatorTable(int i, int j, int k, int l, int r, int s) const;
  // t_ab^(r) for a forbidden pair (a, b), through allowed and central letters.
  Poly eliminateForbidden(const Letter& x) const;

  Poly normalize(const Poly& p, Strategy strategy = Strategy::Fast) const;
  bool isZero(const Poly& p) const;

  // Products and brackets of normal forms; results are normal.
  Poly mul(const Poly& a, const Poly& b) const;
  Poly mulWords(const Word& a, const Word& b) const;
  Poly bracket(const Poly& a, const Poly& b) const;
  Poly anticommutator(const Poly& a, const Poly& b) const;

  bool isNormalWord(const Word& w) const;
  // Normal words of filtration degree exactly d, in canonical order.
  std::vector<Word> enumerateNormalWords(int d) const;

  // Generates every allowed-letter family of the table up to total superscript `level`.
  void prepare(int level) const;

  std::size_t consistencyChecks() const;
  std::size_t consistencyFailures() const;
  std::size_t tableEntryCount() const;
  // Visits stored entries in key order.
  void forEachEntry(const std::function<void(const TableKey&, const Poly&)>& fn) const;

  // Cache file: header line, then `m;i,j,k,l;r,s;<poly>` per entry. Returns
  // the number of entries adopted. A missing file loads nothing.
  std::size_t loadCache(const std::string& path);
  // Rewrites the file with this algebra's entries; entries for other m are kept.
  void saveCache(const std::string& path) const;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

// Coefficient of q^d in prod_{r>=1} (1+q^r)^{2m} / (1-q^r)^{2m^2+m+1}.
mpz_class pbwSeriesCount(int m, int d);

inline constexpr const char* kCacheHeader = "# yangian relation table v1";

}  // namespace yangian
