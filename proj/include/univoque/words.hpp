#pragma once

// Binary words, eventually periodic binary sequences and the word-level
// machinery around the Thue-Morse sequence: the morphism 0->01, 1->10, the
// doubling map mu and the two-sided extremal set Gamma.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace univoque {

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

constexpr Ordering flip(Ordering o) noexcept {
  return static_cast<Ordering>(-static_cast<int>(o));
}

std::string_view to_string(Ordering o) noexcept;

using Bit = std::uint8_t;

class BinaryWord {
public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<Bit> bits);

  // Parses a string over {0,1}; the empty string is the empty word.
  static BinaryWord parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  Bit operator[](std::size_t i) const noexcept { return bits_[i]; }
  Bit back() const noexcept { return bits_.back(); }
  std::span<const Bit> bits() const noexcept { return bits_; }
  auto begin() const noexcept { return bits_.begin(); }
  auto end() const noexcept { return bits_.end(); }

  void push_back(Bit b);
  void append(const BinaryWord& w);
  BinaryWord substr(std::size_t pos, std::size_t len) const;
  BinaryWord complement() const;
  std::size_t count_ones() const noexcept;

  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  // Lexicographic; for equal lengths this is the order on words.
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

private:
  std::vector<Bit> bits_;
};

BinaryWord operator+(BinaryWord a, const BinaryWord& b);

// An eventually periodic sequence pre . per^inf, always stored canonically:
// the period is primitive and the preperiod as short as possible, so two
// values are equal iff they denote the same infinite sequence.
class PeriodicSeq {
public:
  PeriodicSeq(BinaryWord preperiod, BinaryWord period);
  static PeriodicSeq purely(BinaryWord period) {
    return PeriodicSeq({}, std::move(period));
  }
  // `PRE(PER)^w`, e.g. `11(0)^w`, `(1100)^w`.
  static PeriodicSeq parse(std::string_view text);

  const BinaryWord& preperiod() const noexcept { return pre_; }
  const BinaryWord& period() const noexcept { return per_; }
  bool is_purely_periodic() const noexcept { return pre_.empty(); }

  // Symbol at 0-based position i (the sequence's (i+1)-th term).
  Bit operator[](std::size_t i) const noexcept {
    return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
  }
  BinaryWord prefix(std::size_t n) const;

  std::string str() const;

  friend bool operator==(const PeriodicSeq&, const PeriodicSeq&) = default;

private:
  BinaryWord pre_;
  BinaryWord per_;
};

// Exact lexicographic comparison of two eventually periodic sequences.
Ordering lex_cmp(const PeriodicSeq& a, const PeriodicSeq& b);

PeriodicSeq shift(const PeriodicSeq& s, std::size_t j);
PeriodicSeq mirror(const PeriodicSeq& s);

// k-th term of the Thue-Morse sequence (k >= 0).
constexpr Bit thue_morse_symbol(std::uint64_t k) noexcept {
  return static_cast<Bit>(__builtin_popcountll(k) & 1);
}
// First n terms m_0 ... m_{n-1}.
BinaryWord thue_morse(std::size_t n);

BinaryWord phi_morphism(const BinaryWord& w);

// mu on sequences: 1, e1, 1-e1, e2, 1-e2, ...
PeriodicSeq mu(const PeriodicSeq& s);
// mu on a prefix of length n gives the prefix of length 2n+1 of the image.
BinaryWord mu(const BinaryWord& prefix);

// Membership in Gamma: mirror(s) <= shift(s,k) <= s for all k >= 0.
bool in_gamma(const PeriodicSeq& s);

// Returns v when u = v . mirror(v).
std::optional<BinaryWord> detect_halfmirror(const BinaryWord& u);

// For s = (v mirror(v))^inf with v = w1, the sequence (w0)^inf of half the
// period. Requires |v| >= 1 and v ending in 1. When |v| >= 2 and s lies in
// Gamma with smallest period 2|v|, the result lies in Gamma, has smallest
// period |v| and is below s.
PeriodicSeq resolve_square(const BinaryWord& v);

}  // namespace univoque
