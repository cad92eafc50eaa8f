#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "univoque/polynomial.hpp"
#include "univoque/words.hpp"

namespace univoque {

struct RationalInterval {
  mpq_class lo;
  mpq_class hi;

  mpq_class width() const { return hi - lo; }
  mpq_class midpoint() const { return (lo + hi) / 2; }
  bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
};

// Element of Q[beta] in the power basis, constant term first.
using QElement = std::vector<mpq_class>;

// A real algebraic number: the unique root of `polynomial` inside an
// isolating interval. The interval is refined by exact bisection on demand;
// refinements are cached and shared between copies.
class AlgebraicReal {
public:
  // Certifies (Sturm count) that `poly` has exactly one root in (lo, hi);
  // lo == hi is accepted when lo is itself a root. Throws
  // PreconditionViolated otherwise.
  AlgebraicReal(IntPolynomial poly, mpq_class lo, mpq_class hi);

  const IntPolynomial& polynomial() const noexcept { return poly_; }
  const IntPolynomial& squarefree() const noexcept { return sqf_; }

  // Current enclosure (the tightest computed so far).
  RationalInterval interval() const;
  // Enclosure of width < `width` (or exact).
  RationalInterval refine(const mpq_class& width) const;
  bool is_rational() const;
  double to_double() const;

  // Sign of q(beta), including an exact zero test.
  int sign_of(const QElement& q) const;
  int sign_of(const IntPolynomial& q) const;

  Ordering compare(const mpq_class& r) const;
  friend Ordering compare(const AlgebraicReal& a, const AlgebraicReal& b);

private:
  struct State;
  void bisect_once() const;
  std::pair<int, bool> interval_sign(const QElement& q) const;

  IntPolynomial poly_;
  IntPolynomial sqf_;
  std::shared_ptr<State> state_;
};

Ordering compare(const AlgebraicReal& a, const AlgebraicReal& b);

}  // namespace univoque
