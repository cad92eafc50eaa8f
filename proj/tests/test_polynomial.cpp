#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "univoque/algebraic.hpp"
#include "univoque/beta.hpp"
#include "univoque/errors.hpp"
#include "univoque/polynomial.hpp"

using namespace univoque;

namespace {

IntPolynomial random_poly(univoque::test::Rng& rng, int max_deg) {
  const int deg = static_cast<int>(univoque::test::uniform(rng, 0, static_cast<std::size_t>(max_deg)));
  std::vector<mpz_class> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = static_cast<long>(univoque::test::uniform(rng, 0, 10)) - 5;
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("construction, parse and printing") {
  const IntPolynomial p{-1, -1, 1};
  CHECK(p.degree() == 2);
  CHECK(p.str() == "[-1,-1,1]");
  CHECK(p.pretty() == "x^2-x-1");
  CHECK(IntPolynomial::parse("[-1,-1,1]") == p);
  CHECK(IntPolynomial::parse("[-1,0,2]").pretty() == "2x^2-1");
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial{-1, 1, -2, 1}.pretty() == "x^3-2x^2+x-1");
  CHECK_THROWS_AS(IntPolynomial::parse("[1,2"), ParseError);
  CHECK_THROWS_AS(IntPolynomial::parse("[0,0]"), ParseError);
}

TEST_CASE("evaluation and arithmetic") {
  const IntPolynomial p{-1, -1, 1};
  CHECK(p.eval(mpq_class(2)) == 1);
  CHECK(p.sign_at(mpq_class(3, 2)) == -1);
  CHECK(p.sign_at(mpq_class(1)) == -1);
  CHECK(p.sign_at(mpq_class(2)) == 1);
  CHECK(p.eval(1.5) == doctest::Approx(-0.25));
  CHECK(p.derivative() == IntPolynomial{-1, 2});
  CHECK((IntPolynomial{1, 1} * IntPolynomial{-1, 1}) == IntPolynomial{-1, 0, 1});
  CHECK((IntPolynomial{1, 1} - IntPolynomial{1, 1}).is_zero());
  CHECK(IntPolynomial{2, 4, 6}.content() == 2);
  CHECK(IntPolynomial{-2, -4, -6}.primitive() == IntPolynomial{1, 2, 3});
}

TEST_CASE("division and gcd") {
  const IntPolynomial a = IntPolynomial{-1, 1} * IntPolynomial{-2, 1};
  const IntPolynomial b = IntPolynomial{-1, 1} * IntPolynomial{3, 1};
  CHECK(gcd(a, b) == IntPolynomial{-1, 1});
  CHECK(exact_quotient(a, IntPolynomial{-2, 1}).value() == IntPolynomial{-1, 1});
  CHECK_FALSE(exact_quotient(a, IntPolynomial{3, 1}).has_value());
  CHECK(divides(IntPolynomial{-1, 1, -2, 1}, IntPolynomial{-1, 0, -1, -1, 1}));
  CHECK(squarefree_part(a * a * IntPolynomial{5, 1}) == a * IntPolynomial{5, 1});
}

TEST_CASE("random products are divisible by their factors") {
  auto rng = univoque::test::make_rng(11);
  for (int i = 0; i < 300; ++i) {
    const IntPolynomial p = random_poly(rng, 5);
    const IntPolynomial q = random_poly(rng, 5);
    if (q.is_zero() || p.is_zero()) continue;
    const IntPolynomial pq = p * q;
    REQUIRE(exact_quotient(pq, q).value() == p);
    REQUIRE(pseudo_remainder(pq, q).is_zero());
    REQUIRE(divides(gcd(p, q), p));
    REQUIRE(divides(gcd(p, q), q));
  }
}

TEST_CASE("Sturm root counts") {
  const IntPolynomial p = IntPolynomial{-1, 1} * IntPolynomial{-2, 1} * IntPolynomial{-3, 1};
  CHECK(count_real_roots(p, mpq_class(0), mpq_class(4)) == 3);
  CHECK(count_real_roots(p, mpq_class(3, 2), mpq_class(5, 2)) == 1);
  CHECK(count_real_roots(IntPolynomial{1, 0, 1}, mpq_class(-10), mpq_class(10)) == 0);
  CHECK(count_real_roots(IntPolynomial{-1, -1, 1}, mpq_class(1), mpq_class(2)) == 1);
}

TEST_CASE("rational text") {
  CHECK(parse_rational("1.25") == mpq_class(5, 4));
  CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
  CHECK(parse_rational("1e-3") == mpq_class(1, 1000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK(format_rational(mpq_class(5, 4)) == "1.25");
  CHECK(format_rational(mpq_class(-1, 8)) == "-0.125");
  CHECK(format_rational(mpq_class(1, 3)) == "1/3");
  CHECK(format_rational(mpq_class(7)) == "7");
}

TEST_CASE("algebraic numbers") {
  const AlgebraicReal g(IntPolynomial{-1, -1, 1}, 1, 2);
  CHECK(g.to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-15));
  const RationalInterval iv = g.refine(mpq_class(1, 1000000));
  CHECK(iv.width() < mpq_class(1, 1000000));
  CHECK(iv.lo < parse_rational("1.6180339888"));
  CHECK(iv.hi > parse_rational("1.6180339887"));
  CHECK(g.compare(mpq_class(8, 5)) == Ordering::Greater);
  CHECK(g.compare(mpq_class(13, 8)) == Ordering::Less);
  // g^2 - g - 1 = 0 exactly; g - 1 > 0.
  CHECK(g.sign_of(QElement{-1, -1, 1}) == 0);
  CHECK(g.sign_of(QElement{-1, 1}) == 1);
  CHECK(g.sign_of(IntPolynomial{1, -1}) == -1);
  CHECK_THROWS_AS(AlgebraicReal(IntPolynomial{-1, -1, 1}, -2, 2), PreconditionViolated);
  CHECK_THROWS_AS(AlgebraicReal(IntPolynomial{-1, 0, 1}, 1, 2), PreconditionViolated);
}

TEST_CASE("comparison of algebraic numbers, including equal ones") {
  const AlgebraicReal g(IntPolynomial{-1, -1, 1}, 1, 2);
  // The same number, presented through a reducible multiple.
  const AlgebraicReal h(IntPolynomial{-1, -1, 1} * IntPolynomial{1, 1, 1}, mpq_class(3, 2), 2);
  const AlgebraicReal t(IntPolynomial{-1, -1, -1, 1}, 1, 2);
  CHECK(compare(g, h) == Ordering::Equal);
  CHECK(compare(g, t) == Ordering::Less);
  CHECK(compare(t, g) == Ordering::Greater);
  const AlgebraicReal rational_root(IntPolynomial{-3, 2}, 1, 2);
  CHECK(rational_root.compare(mpq_class(3, 2)) == Ordering::Equal);
}

TEST_CASE("BetaValue text forms and range") {
  const BetaValue f = BetaValue::parse("float:1.9");
  CHECK(f.is_float());
  CHECK(f.rational() == mpq_class(19, 10));
  CHECK(f.str() == "float:1.9");
  const BetaValue a = BetaValue::parse("poly:[-1,-1,1]@(1,2)");
  CHECK(a.is_algebraic());
  CHECK(a.to_double() == doctest::Approx(1.6180339887));
  CHECK(BetaValue::parse(a.str()).compare(a) == Ordering::Equal);
  CHECK(a.compare(f) == Ordering::Less);
  CHECK(BetaValue::from_double(1.7).rational() == mpq_class(17, 10));
  CHECK_THROWS_AS(BetaValue::parse("float:2"), PreconditionViolated);
  CHECK_THROWS_AS(BetaValue::parse("float:1"), PreconditionViolated);
  CHECK_THROWS_AS(BetaValue::parse("1.5"), ParseError);
  CHECK_THROWS_AS(BetaValue::parse("poly:[-1,-1,1]"), ParseError);
}
