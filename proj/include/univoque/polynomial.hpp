#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace univoque {

// Integer polynomial, coefficients stored constant term first. The zero
// polynomial has no coefficients and degree -1; otherwise the leading
// coefficient is nonzero.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  // `[c0,c1,...,cd]`
  static IntPolynomial parse(std::string_view text);
  // x^n
  static IntPolynomial monomial(std::size_t n, long coefficient = 1);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<mpz_class>& coefficients() const noexcept { return c_; }
  const mpz_class& leading() const { return c_.back(); }
  mpz_class coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

  // Exact sign of p(x).
  int sign_at(const mpq_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  double eval(double x) const;

  IntPolynomial derivative() const;
  mpz_class content() const;
  // Divided by its content, leading coefficient made positive.
  IntPolynomial primitive() const;

  // `[-1,-1,1]`
  std::string str() const;
  // `x^2-x-1`
  std::string pretty() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& k, const IntPolynomial& a);

private:
  void trim();
  std::vector<mpz_class> c_;
};

// Pseudo-remainder with a positive multiplier: returns r with
// k*a = q*b + r, k > 0, deg r < deg b. b must be nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// a / b when b divides a over the rationals and the quotient is integral.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
bool divides(const IntPolynomial& divisor, const IntPolynomial& p);

// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);
IntPolynomial squarefree_part(const IntPolynomial& p);

// Sturm chain of p (p, p', -rem, ...), each term scaled by positive constants.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);
// Number of distinct real roots in (a, b); a < b must not be roots of p.
std::size_t count_real_roots(const IntPolynomial& p, const mpq_class& a, const mpq_class& b);

// Rational helpers shared by the text formats.
mpq_class parse_rational(std::string_view text);
// Exact decimal when the value has one, otherwise `p/q`.
std::string format_rational(const mpq_class& q);

}  // namespace univoque
