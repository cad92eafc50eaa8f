#pragma once

// Brute-force checks that do not use the a_k construction: necklace
// enumeration, exhaustive uniqueness tests and recovery of beta_n by
// bisection over beta.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "univoque/beta.hpp"
#include "univoque/words.hpp"

namespace univoque {

struct Necklace {
  BinaryWord representative;  // largest rotation
  std::size_t period;
};

// One representative per rotation class of primitive binary words of length
// n, in increasing order. Throws TooLarge for n > 24.
std::vector<Necklace> enumerate_primitive_necklaces(std::size_t n);

// (1/n) sum_{d|n} mobius(d) 2^(n/d).
std::uint64_t primitive_necklace_count(std::size_t n);

// Some purely periodic sequence of smallest period n is a unique expansion
// in base beta. Returns the first such necklace, if any.
std::optional<PeriodicSeq> find_period_n_unique(const BetaValue& beta, std::size_t n);
bool exists_period_n_unique(const BetaValue& beta, std::size_t n);

struct MinBetaResult {
  std::size_t n = 0;
  mpq_class lo;                // predicate false here
  mpq_class hi;                // predicate true here
  PeriodicSeq witness{BinaryWord{}, BinaryWord(std::vector<Bit>{0})};  // unique expansion of period n at hi
  std::vector<std::string> anomalies;  // monotonicity spot-check failures
  std::size_t retries = 0;     // undecided memberships that needed a retry
  BetaValue value() const { return BetaValue::from_rational((lo + hi) / 2); }
};

// inf { beta : exists_period_n_unique(beta, n) } bracketed to width < eps by
// bisection on [3/2, 2 - 2^-10]. Requires 2 <= n <= 16.
MinBetaResult min_beta_for_period(std::size_t n, double eps = 1e-8);

struct OrderingEntry {
  std::size_t n;
  mpq_class lo;
  mpq_class hi;
  PeriodicSeq witness;  // a_n, the quasi-greedy expansion of 1 at beta_n
  std::size_t chain_position;  // 0 for the smallest beta_n
};

struct OrderingViolation {
  std::size_t k;
  std::size_t m;
  Ordering numeric;  // beta_k against beta_m
  Ordering expected;
};

struct OrderingReport {
  std::size_t max_n = 0;
  std::vector<OrderingEntry> chain;  // sorted by beta_n
  std::vector<OrderingViolation> violations;
};

// Compares beta_n(k) and beta_n(m) for all 2 <= k < m <= N against the
// Sharkovskii order: beta_k < beta_m exactly when m comes before k.
// Requires 2 <= N <= 30.
OrderingReport verify_ordering(std::size_t N);

}  // namespace univoque
