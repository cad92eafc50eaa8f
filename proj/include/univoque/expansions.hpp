#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>

#include "univoque/beta.hpp"
#include "univoque/words.hpp"

namespace univoque {

inline constexpr std::size_t kDefaultDigitBudget = 256;

// Greedy digits of x in base beta, produced lazily. Produced digits never
// change; extension is internally synchronized, so copies may be read from
// several threads.
//
// For Algebraic beta the orbit tau^n(x) is tracked exactly in Q[beta] and
// every digit is certified. For Float beta the orbit is exact rational
// arithmetic on the stored value; a point within `tolerance` of the branch
// point raises UndecidableDigit.
class GreedyExpansion {
public:
  struct Finite {
    std::size_t at;  // 1-based position of the last 1
  };
  struct Infinite {};
  struct Unknown {
    std::size_t budget;
  };
  using Flag = std::variant<Finite, Infinite, Unknown>;

  GreedyExpansion(BetaValue beta, const mpq_class& x, std::size_t budget = kDefaultDigitBudget);

  const BetaValue& beta() const noexcept;
  std::size_t budget() const noexcept;

  // 0-based digit (digit i is epsilon_{i+1}).
  Bit digit(std::size_t i) const;
  BinaryWord prefix(std::size_t n) const;
  // Position of the last 1 if the expansion terminates within n digits.
  std::optional<std::size_t> finite_within(std::size_t n) const;
  // Finite / Infinite (an exact orbit repeated) / Unknown(budget).
  Flag finite_flag() const;

private:
  struct State;
  std::shared_ptr<State> state_;
};

// First n greedy digits of x in [0,1].
BinaryWord greedy_expansion(const BetaValue& beta, const mpq_class& x, std::size_t n);

// d(beta), the greedy expansion of 1.
GreedyExpansion d_of_beta(const BetaValue& beta, std::size_t budget = kDefaultDigitBudget);

// d'(beta) = (e1 ... e_{n-1} 0)^inf when d(beta) = e1 ... e_{n-1} 1 0^inf.
// Throws NotParry when d(beta) is not known to be finite.
PeriodicSeq quasi_greedy(const BetaValue& beta);

// sum_k s_k beta^-k in closed form.
double pi_beta(const BetaValue& beta, const PeriodicSeq& s);
mpq_class pi_beta_exact(const mpq_class& beta, const PeriodicSeq& s);

// The unique beta in (1,2) with sum s_j beta^-j = 1. Needs at least one 0
// and two 1s in s. Algebraic for purely periodic s and for finite words
// (tail 0^inf); otherwise a Float found by exact-sign bisection.
BetaValue solve_base(const PeriodicSeq& s);

// shift(s,j) < s for every j >= 1.
bool is_parry_admissible(const PeriodicSeq& s);

// mirror(d) < shift(s,j) < d for every j, with d the quasi-greedy expansion
// when d(beta) is finite and d(beta) otherwise. Requires purely periodic s.
// Describes the periodic members of the attractor, so the fixed points 0^inf
// and 1^inf are reported as false. `budget` = 0 means 4*period + 64 digits
// per comparison; a comparison that stays tied that long raises Undecided.
bool is_unique_expansion(const BetaValue& beta, const PeriodicSeq& s, std::size_t budget = 0);
bool is_unique_expansion(const GreedyExpansion& d, const PeriodicSeq& s, std::size_t budget = 0);

// beta x on [0, 1/beta), beta x - 1 on (1/(beta(beta-1)), 1/(beta-1)].
// Throws MiddleGap in between and OutOfDomain outside [0, 1/(beta-1)].
double F_beta(const BetaValue& beta, double x);

// pi_beta(s) in ((2-beta)/(beta-1), 1) and s a unique expansion.
bool in_attractor(const BetaValue& beta, const PeriodicSeq& s);

}  // namespace univoque
