#include "univoque/algebraic.hpp"

#include <algorithm>
#include <mutex>

#include "univoque/errors.hpp"

namespace univoque {

struct AlgebraicReal::State {
  std::mutex mutex;
  mpq_class lo;
  mpq_class hi;
  int sign_lo = 0;  // sign of the square-free polynomial at lo
  bool exact = false;
};

AlgebraicReal::AlgebraicReal(IntPolynomial poly, mpq_class lo, mpq_class hi)
    : poly_(std::move(poly)), state_(std::make_shared<State>()) {
  if (poly_.degree() < 1) throw PreconditionViolated("algebraic number needs a nonconstant polynomial");
  if (hi < lo) throw PreconditionViolated("isolating interval has lo > hi");
  sqf_ = squarefree_part(poly_);
  state_->lo = lo;
  state_->hi = hi;
  if (lo == hi) {
    if (sqf_.sign_at(lo) != 0) throw PreconditionViolated("degenerate interval is not a root");
    state_->exact = true;
    return;
  }
  if (sqf_.sign_at(lo) == 0 || sqf_.sign_at(hi) == 0) {
    throw PreconditionViolated("isolating interval endpoint is a root of " + poly_.pretty());
  }
  const std::size_t roots = count_real_roots(sqf_, lo, hi);
  if (roots != 1) {
    throw PreconditionViolated(poly_.pretty() + " has " + std::to_string(roots) + " roots in (" +
                               format_rational(lo) + "," + format_rational(hi) + ")");
  }
  state_->sign_lo = sqf_.sign_at(lo);
}

void AlgebraicReal::bisect_once() const {
  State& s = *state_;
  if (s.exact) return;
  mpq_class mid = (s.lo + s.hi) / 2;
  const int sm = sqf_.sign_at(mid);
  if (sm == 0) {
    s.lo = mid;
    s.hi = mid;
    s.exact = true;
  } else if (sm == s.sign_lo) {
    s.lo = std::move(mid);
  } else {
    s.hi = std::move(mid);
  }
}

RationalInterval AlgebraicReal::interval() const {
  std::lock_guard lock(state_->mutex);
  return {state_->lo, state_->hi};
}

RationalInterval AlgebraicReal::refine(const mpq_class& width) const {
  std::lock_guard lock(state_->mutex);
  while (!state_->exact && !(state_->hi - state_->lo < width)) bisect_once();
  return {state_->lo, state_->hi};
}

bool AlgebraicReal::is_rational() const {
  std::lock_guard lock(state_->mutex);
  return state_->exact;
}

double AlgebraicReal::to_double() const {
  const auto iv = refine(mpq_class(1, 1) / mpq_class(mpz_class(1) << 64));
  return iv.midpoint().get_d();
}

namespace {

// [a,b] * [c,d] for arbitrary signs.
void interval_mul(mpq_class& a, mpq_class& b, const mpq_class& c, const mpq_class& d) {
  mpq_class p[4] = {a * c, a * d, b * c, b * d};
  a = *std::min_element(p, p + 4);
  b = *std::max_element(p, p + 4);
}

IntPolynomial to_integer_polynomial(const QElement& q) {
  mpz_class den = 1;
  for (const auto& v : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> c(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) c[i] = q[i].get_num() * (den / q[i].get_den());
  return IntPolynomial(std::move(c));
}

}  // namespace

// Interval Horner over the current enclosure; `second` is false when the
// image straddles zero.
std::pair<int, bool> AlgebraicReal::interval_sign(const QElement& q) const {
  const State& s = *state_;
  if (q.empty()) return {0, true};
  if (s.exact) {
    mpq_class acc = 0;
    for (std::size_t i = q.size(); i-- > 0;) acc = acc * s.lo + q[i];
    return {sgn(acc), true};
  }
  mpq_class lo = q.back();
  mpq_class hi = q.back();
  for (std::size_t i = q.size() - 1; i-- > 0;) {
    interval_mul(lo, hi, s.lo, s.hi);
    lo += q[i];
    hi += q[i];
  }
  if (lo > 0) return {1, true};
  if (hi < 0) return {-1, true};
  if (lo == 0 && hi == 0) return {0, true};
  return {0, false};
}

int AlgebraicReal::sign_of(const QElement& q) const {
  std::lock_guard lock(state_->mutex);
  bool zero_tested = false;
  for (;;) {
    const auto [sign, decided] = interval_sign(q);
    if (decided) return sign;
    if (!zero_tested) {
      zero_tested = true;
      const IntPolynomial g = gcd(sqf_, to_integer_polynomial(q));
      // g divides the square-free polynomial, whose only root in the
      // enclosure is beta, so g vanishes at beta iff it changes sign there.
      if (g.degree() >= 1 && g.sign_at(state_->lo) * g.sign_at(state_->hi) < 0) return 0;
    }
    bisect_once();
  }
}

int AlgebraicReal::sign_of(const IntPolynomial& q) const {
  QElement e(q.coefficients().begin(), q.coefficients().end());
  return sign_of(e);
}

Ordering AlgebraicReal::compare(const mpq_class& r) const {
  std::lock_guard lock(state_->mutex);
  for (;;) {
    const State& s = *state_;
    if (s.exact) return s.lo < r ? Ordering::Less : (s.lo > r ? Ordering::Greater : Ordering::Equal);
    if (r < s.lo) return Ordering::Greater;
    if (r > s.hi) return Ordering::Less;
    if (sqf_.sign_at(r) == 0) return Ordering::Equal;
    bisect_once();
  }
}

namespace {

bool has_root_in(const IntPolynomial& g, const mpq_class& lo, const mpq_class& hi) {
  if (g.sign_at(lo) == 0 || g.sign_at(hi) == 0) return true;
  if (lo == hi) return false;
  return count_real_roots(g, lo, hi) > 0;
}

}  // namespace

Ordering compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.state_ == b.state_) return Ordering::Equal;
  const mpq_class equality_probe_width = mpq_class(1) / mpq_class(mpz_class(1) << 40);
  bool equality_tested = false;
  for (;;) {
    const RationalInterval ia = a.interval();
    const RationalInterval ib = b.interval();
    if (ia.hi < ib.lo) return Ordering::Less;
    if (ib.hi < ia.lo) return Ordering::Greater;
    if (ia.lo == ia.hi && ib.lo == ib.hi) return Ordering::Equal;  // overlap of two points
    const bool narrow = ia.width() < equality_probe_width && ib.width() < equality_probe_width;
    if (narrow && !equality_tested) {
      equality_tested = true;
      const IntPolynomial g = gcd(a.sqf_, b.sqf_);
      // A common root inside both enclosures is beta_a and beta_b at once.
      if (g.degree() >= 1 && has_root_in(g, std::max(ia.lo, ib.lo), std::min(ia.hi, ib.hi))) {
        return Ordering::Equal;
      }
    }
    // Refine whichever enclosure is wider.
    if (ia.width() >= ib.width()) {
      a.refine(ia.width() / 2);
    } else {
      b.refine(ib.width() / 2);
    }
  }
}

}  // namespace univoque
