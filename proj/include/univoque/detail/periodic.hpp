#pragma once

// Canonical (preperiod, period) form and the `PRE(PER)^w` text grammar,
// shared by binary sequences and L/C/R itineraries.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "univoque/errors.hpp"

namespace univoque::detail {

// Length of the shortest period of `w` (failure-function border check).
template <class T>
std::size_t smallest_period(std::span<const T> w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::size_t> border(n + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k];
    if (w[i] == w[k]) ++k;
    border[i + 1] = k;
  }
  return n - border[n];
}

// Length of the primitive root of `w`: w == root^(n/len).
template <class T>
std::size_t primitive_root_length(std::span<const T> w) {
  const std::size_t n = w.size();
  const std::size_t p = smallest_period(w);
  return (p != 0 && n % p == 0) ? p : n;
}

// Brings (pre, per) to canonical form: primitive period, shortest preperiod.
template <class T>
void canonicalize(std::vector<T>& pre, std::vector<T>& per) {
  if (per.empty()) return;
  per.resize(primitive_root_length(std::span<const T>(per)));
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
}

struct RawPeriodic {
  std::string pre;
  std::string per;
  bool periodic = false;
};

// Splits `PRE(PER)^w` (or a bare finite word when `allow_finite`) into its
// parts, checking every symbol against `alphabet`.
inline RawPeriodic split_periodic_text(std::string_view text,
                                       std::string_view alphabet,
                                       bool allow_finite) {
  auto check = [&](std::string_view part) {
    for (char c : part) {
      if (alphabet.find(c) == std::string_view::npos) {
        throw ParseError("unexpected symbol '" + std::string(1, c) + "' in '" +
                         std::string(text) + "'");
      }
    }
  };
  RawPeriodic out;
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    if (!allow_finite) {
      throw ParseError("expected PRE(PER)^w, got '" + std::string(text) + "'");
    }
    check(text);
    out.pre = std::string(text);
    return out;
  }
  const auto close = text.find(')', open);
  if (close == std::string_view::npos || text.substr(close) != ")^w") {
    throw ParseError("expected PRE(PER)^w, got '" + std::string(text) + "'");
  }
  const auto pre = text.substr(0, open);
  const auto per = text.substr(open + 1, close - open - 1);
  if (per.empty()) throw ParseError("empty period in '" + std::string(text) + "'");
  check(pre);
  check(per);
  out.pre = std::string(pre);
  out.per = std::string(per);
  out.periodic = true;
  return out;
}

inline std::string join_periodic_text(const std::string& pre,
                                      const std::string& per) {
  if (per.empty()) return pre;
  return pre + "(" + per + ")^w";
}

}  // namespace univoque::detail
