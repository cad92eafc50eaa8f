#include "univoque/beta.hpp"

#include <charconv>
#include <cmath>

#include "univoque/errors.hpp"

namespace univoque {

BetaValue::BetaValue(FloatPart f) : v_(std::move(f)) { check_range(); }
BetaValue::BetaValue(AlgebraicReal a) : v_(std::move(a)) { check_range(); }

void BetaValue::check_range() const {
  if (compare(mpq_class(1)) != Ordering::Greater || compare(mpq_class(2)) != Ordering::Less) {
    throw PreconditionViolated("beta must lie strictly inside (1,2), got " + str());
  }
}

BetaValue BetaValue::from_rational(mpq_class value, double tolerance) {
  if (!(tolerance >= 0.0)) throw PreconditionViolated("tolerance must be nonnegative");
  value.canonicalize();
  return BetaValue(FloatPart{std::move(value), tolerance});
}

BetaValue BetaValue::from_double(double value, double tolerance) {
  if (!std::isfinite(value)) throw PreconditionViolated("beta must be finite");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return from_rational(parse_rational(std::string_view(buf, res.ptr)), tolerance);
}

BetaValue BetaValue::algebraic(AlgebraicReal value) { return BetaValue(std::move(value)); }

BetaValue BetaValue::algebraic(IntPolynomial poly, mpq_class lo, mpq_class hi) {
  return BetaValue(AlgebraicReal(std::move(poly), std::move(lo), std::move(hi)));
}

BetaValue BetaValue::parse(std::string_view text) {
  if (text.starts_with("float:")) return from_rational(parse_rational(text.substr(6)));
  if (text.starts_with("poly:")) {
    const auto body = text.substr(5);
    const auto at = body.find('@');
    if (at == std::string_view::npos) throw ParseError("expected poly:[...]@(lo,hi), got '" + std::string(text) + "'");
    const auto poly = IntPolynomial::parse(body.substr(0, at));
    auto iv = body.substr(at + 1);
    if (iv.size() < 5 || iv.front() != '(' || iv.back() != ')') {
      throw ParseError("expected isolating interval (lo,hi), got '" + std::string(iv) + "'");
    }
    iv = iv.substr(1, iv.size() - 2);
    const auto comma = iv.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected (lo,hi) in '" + std::string(text) + "'");
    return algebraic(poly, parse_rational(iv.substr(0, comma)), parse_rational(iv.substr(comma + 1)));
  }
  throw ParseError("beta must be float:<value> or poly:[...]@(lo,hi), got '" + std::string(text) + "'");
}

const mpq_class& BetaValue::rational() const {
  if (!is_float()) throw PreconditionViolated("beta is not a Float value");
  return std::get<FloatPart>(v_).value;
}

double BetaValue::tolerance() const {
  if (!is_float()) throw PreconditionViolated("beta is not a Float value");
  return std::get<FloatPart>(v_).tolerance;
}

const AlgebraicReal& BetaValue::algebraic() const {
  if (is_float()) throw PreconditionViolated("beta is not an Algebraic value");
  return std::get<AlgebraicReal>(v_);
}

double BetaValue::to_double() const {
  return is_float() ? rational().get_d() : algebraic().to_double();
}

RationalInterval BetaValue::enclosure(const mpq_class& width) const {
  if (is_float()) return {rational(), rational()};
  return algebraic().refine(width);
}

Ordering BetaValue::compare(const mpq_class& r) const {
  if (is_float()) {
    const int c = cmp(rational(), r);
    return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
  }
  return algebraic().compare(r);
}

Ordering BetaValue::compare(const BetaValue& other) const {
  if (other.is_float()) return compare(other.rational());
  if (is_float()) return flip(other.compare(rational()));
  return univoque::compare(algebraic(), other.algebraic());
}

std::string BetaValue::str() const {
  if (is_float()) return "float:" + format_rational(rational());
  const auto& a = algebraic();
  const auto iv = a.interval();
  return "poly:" + a.polynomial().str() + "@(" + format_rational(iv.lo) + "," + format_rational(iv.hi) + ")";
}

}  // namespace univoque
