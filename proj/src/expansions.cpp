#include "univoque/expansions.hpp"

#include <cmath>
#include <mutex>
#include <set>

#include "univoque/errors.hpp"

namespace univoque {

struct GreedyExpansion::State {
  State(BetaValue b, std::size_t budget_) : beta(std::move(b)), budget(budget_) {}

  BetaValue beta;
  std::size_t budget;
  std::mutex mutex;
  std::vector<Bit> digits;
  std::optional<std::size_t> finite_at;
  bool cycled = false;

  // Float orbit.
  mpq_class beta_q;
  mpq_class tolerance_q;
  mpq_class xf;

  // Algebraic orbit: x in Q[beta] reduced modulo the monic square-free polynomial.
  QElement modulus;
  QElement xa;
  std::set<QElement> seen;

  void step();
  void extend_to(std::size_t n) {
    while (digits.size() < n) step();
  }
};

void GreedyExpansion::State::step() {
  const std::size_t index = digits.size();
  if (finite_at) {
    digits.push_back(0);
    return;
  }
  if (beta.is_float()) {
    const mpq_class y = beta_q * xf;
    const mpq_class diff = y - 1;
    if (diff == 0) {
      digits.push_back(1);
      xf = 0;
      finite_at = index + 1;
      return;
    }
    if (tolerance_q > 0 && abs(diff) < tolerance_q) {
      throw UndecidableDigit("greedy digit " + std::to_string(index + 1) + " of " + beta.str() +
                                 " lies within tolerance of the branch point",
                             index);
    }
    const Bit d = diff > 0 ? 1 : 0;
    digits.push_back(d);
    xf = y - d;
    return;
  }

  // y = beta * x, reduced modulo the defining polynomial.
  const std::size_t deg = modulus.size() - 1;
  QElement y(deg, 0);
  const mpq_class top = xa[deg - 1];
  for (std::size_t i = deg - 1; i > 0; --i) y[i] = xa[i - 1];
  y[0] = 0;
  if (top != 0) {
    for (std::size_t i = 0; i < deg; ++i) y[i] -= top * modulus[i];
  }
  QElement e = y;
  e[0] -= 1;
  const int s = beta.algebraic().sign_of(e);
  if (s == 0) {
    digits.push_back(1);
    xa.assign(deg, 0);
    finite_at = index + 1;
    return;
  }
  const Bit d = s > 0 ? 1 : 0;
  digits.push_back(d);
  if (d) y[0] -= 1;
  xa = std::move(y);
  if (!cycled && !seen.insert(xa).second) cycled = true;
}

GreedyExpansion::GreedyExpansion(BetaValue beta, const mpq_class& x, std::size_t budget)
    : state_(std::make_shared<State>(std::move(beta), budget)) {
  if (x < 0 || x > 1) throw PreconditionViolated("greedy expansion needs x in [0,1]");
  State& s = *state_;
  if (x == 0) s.finite_at = 0;
  if (s.beta.is_float()) {
    s.beta_q = s.beta.rational();
    s.tolerance_q = mpq_class(s.beta.tolerance());
    s.xf = x;
  } else {
    const IntPolynomial& m = s.beta.algebraic().squarefree();
    const mpq_class lead = m.leading();
    for (const auto& c : m.coefficients()) s.modulus.push_back(mpq_class(c) / lead);
    s.xa.assign(s.modulus.size() - 1, 0);
    s.xa[0] = x;
  }
}

const BetaValue& GreedyExpansion::beta() const noexcept { return state_->beta; }
std::size_t GreedyExpansion::budget() const noexcept { return state_->budget; }

Bit GreedyExpansion::digit(std::size_t i) const {
  std::lock_guard lock(state_->mutex);
  state_->extend_to(i + 1);
  return state_->digits[i];
}

BinaryWord GreedyExpansion::prefix(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  state_->extend_to(n);
  return BinaryWord(std::vector<Bit>(state_->digits.begin(), state_->digits.begin() + n));
}

std::optional<std::size_t> GreedyExpansion::finite_within(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  if (!state_->finite_at) {
    while (state_->digits.size() < n && !state_->finite_at && !state_->cycled) state_->step();
  }
  if (state_->finite_at && *state_->finite_at <= std::max(n, state_->digits.size())) return state_->finite_at;
  return std::nullopt;
}

GreedyExpansion::Flag GreedyExpansion::finite_flag() const {
  std::lock_guard lock(state_->mutex);
  State& s = *state_;
  try {
    while (!s.finite_at && !s.cycled && s.digits.size() < s.budget) s.step();
  } catch (const UndecidableDigit&) {
    return Unknown{s.digits.size()};
  }
  if (s.finite_at) return Finite{*s.finite_at};
  if (s.cycled) return Infinite{};
  return Unknown{s.budget};
}

BinaryWord greedy_expansion(const BetaValue& beta, const mpq_class& x, std::size_t n) {
  return GreedyExpansion(beta, x).prefix(n);
}

GreedyExpansion d_of_beta(const BetaValue& beta, std::size_t budget) {
  return GreedyExpansion(beta, mpq_class(1), budget);
}

namespace {

PeriodicSeq quasi_greedy_from(const GreedyExpansion& d, std::size_t n) {
  BinaryWord w = d.prefix(n);
  BinaryWord per = w.substr(0, n - 1);
  per.push_back(0);
  return PeriodicSeq::purely(std::move(per));
}

}  // namespace

PeriodicSeq quasi_greedy(const BetaValue& beta) {
  const GreedyExpansion d = d_of_beta(beta);
  const auto flag = d.finite_flag();
  if (const auto* f = std::get_if<GreedyExpansion::Finite>(&flag); f && f->at > 0) {
    return quasi_greedy_from(d, f->at);
  }
  throw NotParry("d(beta) is not known to be finite for " + beta.str());
}

double pi_beta(const BetaValue& beta, const PeriodicSeq& s) {
  const long double b = beta.is_float() ? static_cast<long double>(beta.rational().get_d())
                                        : static_cast<long double>(beta.to_double());
  long double inv = 1.0L / b;
  long double sum = 0.0L;
  long double w = inv;
  for (Bit v : s.preperiod()) {
    if (v) sum += w;
    w *= inv;
  }
  // w = beta^-(r+1); the period contributes w * beta * P / (1 - beta^-p).
  long double per_sum = 0.0L;
  long double u = inv;
  for (Bit v : s.period()) {
    if (v) per_sum += u;
    u *= inv;
  }
  const long double tail = per_sum / (1.0L - u * b);
  sum += w * b * tail;
  return static_cast<double>(sum);
}

mpq_class pi_beta_exact(const mpq_class& beta, const PeriodicSeq& s) {
  const mpq_class inv = 1 / beta;
  mpq_class sum = 0;
  mpq_class w = inv;
  for (Bit v : s.preperiod()) {
    if (v) sum += w;
    w *= inv;
  }
  mpq_class per_sum = 0;
  mpq_class u = inv;
  for (Bit v : s.period()) {
    if (v) per_sum += u;
    u *= inv;
  }
  sum += w * beta * per_sum / (1 - u * beta);
  return sum;
}

BetaValue solve_base(const PeriodicSeq& s) {
  const auto& pre = s.preperiod();
  const auto& per = s.period();
  const bool has_zero = pre.count_ones() < pre.size() || per.count_ones() < per.size();
  const bool two_ones = per.count_ones() > 0 || pre.count_ones() >= 2;
  if (!has_zero || !two_ones) {
    throw PreconditionViolated("solve_base needs at least one 0 and two 1s, got " + s.str());
  }
  if (s.is_purely_periodic()) {
    // beta^p - 1 = sum_i s_i beta^(p-i)
    const std::size_t p = per.size();
    std::vector<mpz_class> c(p + 1, 0);
    c[p] = 1;
    c[0] = -1;
    for (std::size_t i = 1; i <= p; ++i) c[p - i] -= per[i - 1];
    return BetaValue::algebraic(IntPolynomial(std::move(c)), 1, 2);
  }
  if (per.size() == 1 && per[0] == 0) {
    // beta^n = sum_i w_i beta^(n-i)
    const std::size_t n = pre.size();
    std::vector<mpz_class> c(n + 1, 0);
    c[n] = 1;
    for (std::size_t i = 1; i <= n; ++i) c[n - i] -= pre[i - 1];
    return BetaValue::algebraic(IntPolynomial(std::move(c)), 1, 2);
  }
  // f(x) = pi_x(s) - 1 is strictly decreasing on (1,2).
  mpq_class lo = 1;
  mpq_class hi = 2;
  const mpq_class width = mpq_class(1) / mpq_class(mpz_class(1) << 62);
  while (hi - lo >= width) {
    const mpq_class mid = (lo + hi) / 2;
    const int sign = cmp(pi_beta_exact(mid, s), 1);
    if (sign == 0) return BetaValue::from_rational(mid);
    (sign > 0 ? lo : hi) = mid;
  }
  return BetaValue::from_rational((lo + hi) / 2, 0.0);
}

bool is_parry_admissible(const PeriodicSeq& s) {
  const std::size_t shifts = s.preperiod().size() + s.period().size();
  for (std::size_t j = 1; j <= shifts; ++j) {
    if (lex_cmp(shift(s, j), s) != Ordering::Less) return false;
  }
  return true;
}

namespace {

// Compares t = shift(s, j) (mirrored when `mirrored`) against the effective
// upper bound d: the quasi-greedy expansion once d(beta) is seen to
// terminate, d(beta) itself until then.
Ordering compare_with_upper(const GreedyExpansion& d, const PeriodicSeq& s, std::size_t j,
                            bool mirrored, std::size_t budget) {
  for (std::size_t k = 0; k < budget; ++k) {
    const Bit u = d.digit(k);
    if (const auto n = d.finite_within(k + 1); n && *n > 0) {
      PeriodicSeq t = shift(s, j);
      if (mirrored) t = mirror(t);
      return lex_cmp(t, quasi_greedy_from(d, *n));
    }
    Bit a = s[j + k];
    if (mirrored) a = static_cast<Bit>(1 - a);
    if (a != u) return a < u ? Ordering::Less : Ordering::Greater;
  }
  throw Undecided("no strict difference from d(beta) within " + std::to_string(budget) + " digits for " +
                      s.str() + " at " + d.beta().str(),
                  budget);
}

bool satisfies_criterion(const GreedyExpansion& d, const PeriodicSeq& s, std::size_t budget) {
  if (budget == 0) budget = 4 * s.period().size() + 64;
  const std::size_t shifts = s.preperiod().size() + s.period().size();
  for (std::size_t j = 0; j < shifts; ++j) {
    if (compare_with_upper(d, s, j, false, budget) != Ordering::Less) return false;
    if (compare_with_upper(d, s, j, true, budget) != Ordering::Less) return false;
  }
  return true;
}

}  // namespace

bool is_unique_expansion(const GreedyExpansion& d, const PeriodicSeq& s, std::size_t budget) {
  if (!s.is_purely_periodic()) {
    throw PreconditionViolated("is_unique_expansion needs a purely periodic sequence, got " + s.str());
  }
  return satisfies_criterion(d, s, budget);
}

bool is_unique_expansion(const BetaValue& beta, const PeriodicSeq& s, std::size_t budget) {
  return is_unique_expansion(d_of_beta(beta), s, budget);
}

double F_beta(const BetaValue& beta, double x) {
  const double b = beta.to_double();
  const double top = 1.0 / (b - 1.0);
  if (!(x >= 0.0) || x > top * (1.0 + 1e-12)) throw OutOfDomain("F_beta: x outside [0, 1/(beta-1)]");
  if (x < 1.0 / b) return b * x;
  if (x > 1.0 / (b * (b - 1.0))) return b * x - 1.0;
  throw MiddleGap("F_beta is undefined on [1/beta, 1/(beta(beta-1))]");
}

bool in_attractor(const BetaValue& beta, const PeriodicSeq& s) {
  const double b = beta.to_double();
  const double x = pi_beta(beta, s);
  if (!(x > (2.0 - b) / (b - 1.0) && x < 1.0)) return false;
  return satisfies_criterion(d_of_beta(beta), s, 0);
}

}  // namespace univoque
