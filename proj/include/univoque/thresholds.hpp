#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>

#include "univoque/algebraic.hpp"
#include "univoque/beta.hpp"
#include "univoque/polynomial.hpp"
#include "univoque/words.hpp"

namespace univoque {

inline constexpr double kDefaultRootEps = 1e-8;

// k = 2^n (2m+1).
struct SharkovskiiKey {
  unsigned n = 0;
  std::uint64_t m = 0;
  friend bool operator==(const SharkovskiiKey&, const SharkovskiiKey&) = default;
};

SharkovskiiKey decompose(std::uint64_t k);

// Less when k comes before l in 3, 5, 7, ..., 2*3, 2*5, ..., 4*3, ..., 8, 4, 2, 1.
Ordering sharkovskii_cmp(std::uint64_t k, std::uint64_t l);

// Least purely periodic member of Gamma with primitive period k, built by
// iterating mu on 0^inf or (1(10)^m)^inf.
PeriodicSeq a_k_recursive(std::size_t k);
// The same sequence written directly as Thue-Morse fragments.
PeriodicSeq a_k_explicit(std::size_t k);

// x^k - a1 x^(k-1) - ... - a_(k-1) x - 1, where a1 a2 ... is the period of a_k.
// Possibly reducible.
IntPolynomial beta_poly(std::size_t k);

// p with every factor shared with some x^j - 1 (j <= 2 deg p) divided out.
IntPolynomial strip_cyclotomic(const IntPolynomial& p);

// Root of beta_poly(k) in (1,2), isolating interval narrower than eps.
BetaValue beta_n(std::size_t k, double eps = kDefaultRootEps);

// Interval of width < width containing the root of sum m_k x^-k = 1, with
// m_k the Thue-Morse digits 1,1,0,1,0,0,1,... Signs are certified by a
// geometric bound on the truncated tail.
RationalInterval beta_KL_bracket(const mpq_class& width);
// Midpoint of beta_KL_bracket(eps) as a Float value.
BetaValue beta_KL(double eps = kDefaultRootEps);

// beta_n(k) < beta_KL, decided on disjoint certified enclosures.
bool below_KL(std::size_t k);

// Root of x^n - x^(n-1) - 1 in (1,2).
BetaValue q_n(std::size_t n, double eps = kDefaultRootEps);

}  // namespace univoque
