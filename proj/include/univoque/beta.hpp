#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

#include "univoque/algebraic.hpp"

namespace univoque {

// A base beta in (1,2), either a Float (an exact rational together with the
// tolerance used when a greedy digit lands near a branch point) or an
// Algebraic number certified by an isolating interval.
//
// Text form: `float:1.9` or `poly:[-1,-1,1]@(1,2)`.
class BetaValue {
public:
  static constexpr double kDefaultTolerance = 1e-12;

  static BetaValue from_rational(mpq_class value, double tolerance = kDefaultTolerance);
  // Uses the shortest decimal that round-trips to `value`.
  static BetaValue from_double(double value, double tolerance = kDefaultTolerance);
  static BetaValue algebraic(AlgebraicReal value);
  static BetaValue algebraic(IntPolynomial poly, mpq_class lo, mpq_class hi);
  static BetaValue parse(std::string_view text);

  bool is_float() const noexcept { return std::holds_alternative<FloatPart>(v_); }
  bool is_algebraic() const noexcept { return !is_float(); }

  const mpq_class& rational() const;       // Float kind only
  double tolerance() const;                // Float kind only
  const AlgebraicReal& algebraic() const;  // Algebraic kind only

  double to_double() const;
  // Enclosure of width < `width`; a point interval for Float.
  RationalInterval enclosure(const mpq_class& width) const;

  Ordering compare(const BetaValue& other) const;
  Ordering compare(const mpq_class& r) const;

  std::string str() const;

private:
  struct FloatPart {
    mpq_class value;
    double tolerance;
  };
  explicit BetaValue(FloatPart f);
  explicit BetaValue(AlgebraicReal a);
  void check_range() const;

  std::variant<FloatPart, AlgebraicReal> v_;
};

}  // namespace univoque
