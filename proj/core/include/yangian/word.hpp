#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "yangian/index.hpp"

namespace yangian {

// Packed letter identifier: (r << 8) | (slot << 1) | parity, where slot 0 is
// the central letter c^(r) and slot 1 + (i-1)N + (j-1) is t_ij^(r). Numeric
// order on ids is the canonical letter order (r, kind, i, j).
using LetterId = std::uint16_t;

inline constexpr int kMaxSuperscript = 255;

constexpr int letterDegree(LetterId id) noexcept { return id >> 8; }
constexpr int letterParity(LetterId id) noexcept { return id & 1; }
constexpr int letterSlot(LetterId id) noexcept { return (id >> 1) & 0x7f; }
constexpr bool letterIsCentral(LetterId id) noexcept { return letterSlot(id) == 0; }

struct Letter {
  enum class Kind : std::uint8_t { C = 0, T = 1 };
  Kind kind = Kind::T;
  int i = 0;
  int j = 0;
  int r = 1;

  static Letter t(int i, int j, int r) { return Letter{Kind::T, i, j, r}; }
  static Letter c(int r) { return Letter{Kind::C, 0, 0, r}; }
  bool isCentral() const noexcept { return kind == Kind::C; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

class LetterCodec {
 public:
  explicit LetterCodec(int m) : idx_(m) {}

  const IndexData& index() const noexcept { return idx_; }
  int m() const noexcept { return idx_.m(); }

  LetterId encode(const Letter& x) const;
  LetterId t(int i, int j, int r) const { return encode(Letter::t(i, j, r)); }
  LetterId c(int r) const { return encode(Letter::c(r)); }
  Letter decode(LetterId id) const;

  // Allowed letters are the PBW alphabet: every c^(r) and the allowed t_ij^(r).
  bool isAllowed(LetterId id) const;

  // `t[i,j,r]` or `c[r]`.
  std::string format(LetterId id) const;
  LetterId parse(std::string_view text) const;

 private:
  IndexData idx_;
};

class Word {
 public:
  static constexpr int kCapacity = 24;

  Word() = default;
  explicit Word(LetterId id) { push(id); }

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }
  int degree() const noexcept { return deg_; }
  int parity() const noexcept { return par_; }
  LetterId operator[](std::size_t k) const noexcept { return ids_[k]; }
  LetterId back() const noexcept { return ids_[len_ - 1]; }
  const LetterId* begin() const noexcept { return ids_.data(); }
  const LetterId* end() const noexcept { return ids_.data() + len_; }

  void push(LetterId id) {
    if (len_ == kCapacity) throw std::length_error("Word: capacity exceeded");
    ids_[len_++] = id;
    deg_ = static_cast<std::uint8_t>(deg_ + letterDegree(id));
    par_ ^= static_cast<std::uint8_t>(letterParity(id));
  }
  void pop() noexcept {
    LetterId id = ids_[--len_];
    deg_ = static_cast<std::uint8_t>(deg_ - letterDegree(id));
    par_ ^= static_cast<std::uint8_t>(letterParity(id));
  }
  Word withoutLast() const noexcept {
    Word w = *this;
    w.pop();
    return w;
  }

  // Letters [from, to).
  Word slice(std::size_t from, std::size_t to) const;
  void append(const Word& other);
  static Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.append(b);
    return w;
  }

  // Number of odd letters.
  int oddCount() const noexcept;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.len_ == b.len_ && std::memcmp(a.ids_.data(), b.ids_.data(), a.len_ * sizeof(LetterId)) == 0;
  }
  friend bool operator!=(const Word& a, const Word& b) noexcept { return !(a == b); }

  std::size_t hash() const noexcept;

 private:
  std::uint8_t len_ = 0;
  std::uint8_t deg_ = 0;
  std::uint8_t par_ = 0;
  std::array<LetterId, kCapacity> ids_{};
};

// Canonical order: degree, then length, then letter-lexicographic.
inline std::strong_ordering compareWords(const Word& a, const Word& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] <=> b[k];
  }
  return std::strong_ordering::equal;
}

struct WordLess {
  bool operator()(const Word& a, const Word& b) const noexcept { return compareWords(a, b) < 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

std::string formatWord(const LetterCodec& codec, const Word& w);
Word parseWord(const LetterCodec& codec, std::string_view text);

}  // namespace yangian
