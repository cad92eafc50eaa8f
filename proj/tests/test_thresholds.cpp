#include <doctest.h>

#include <vector>

#include "univoque/errors.hpp"
#include "univoque/expansions.hpp"
#include "univoque/oracle.hpp"
#include "univoque/thresholds.hpp"

using namespace univoque;

namespace {

PeriodicSeq seq(const char* text) { return PeriodicSeq::parse(text); }

IntPolynomial poly(const char* text) { return IntPolynomial::parse(text); }

// Published minimal polynomials and values for n = 2..8.
struct Row {
  std::size_t n;
  const char* d;
  const char* minimal;
  double value;
  bool below_kl;
};
const Row kTable[] = {
    {2, "11", "[-1,-1,1]", 1.61803, true},
    {3, "111", "[-1,-1,-1,1]", 1.83929, false},
    {4, "1101", "[-1,1,-2,1]", 1.75488, true},
    {5, "11011", "[-1,-1,0,-1,-1,1]", 1.81240, false},
    {6, "110101", "[-1,0,-1,0,-1,-1,1]", 1.78854, false},
    {7, "1101011", "[-1,0,0,-1,1,-2,1]", 1.80509, false},
    {8, "11010011", "[-1,0,1,0,-2,1]", 1.78460, true},
};

}  // namespace

TEST_CASE("decompose examples") {
  CHECK(decompose(12) == SharkovskiiKey{2, 1});
  CHECK(decompose(1) == SharkovskiiKey{0, 0});
  CHECK(decompose(8) == SharkovskiiKey{3, 0});
  CHECK(decompose(7) == SharkovskiiKey{0, 3});
}

TEST_CASE("decompose is a bijection onto its keys") {
  for (std::uint64_t k = 1; k <= 4096; ++k) {
    const SharkovskiiKey key = decompose(k);
    REQUIRE(((std::uint64_t{1} << key.n) * (2 * key.m + 1)) == k);
  }
}

TEST_CASE("Sharkovskii comparator examples") {
  CHECK(sharkovskii_cmp(3, 5) == Ordering::Less);
  CHECK(sharkovskii_cmp(8, 4) == Ordering::Less);
  CHECK(sharkovskii_cmp(6, 12) == Ordering::Less);
  CHECK(sharkovskii_cmp(7, 7) == Ordering::Equal);
  CHECK(sharkovskii_cmp(2, 1) == Ordering::Less);
  CHECK(sharkovskii_cmp(1001, 6) == Ordering::Less);
  CHECK(sharkovskii_cmp(24, 16) == Ordering::Less);
}

TEST_CASE("Sharkovskii comparator is a strict total order") {
  for (std::uint64_t a = 1; a <= 40; ++a) {
    for (std::uint64_t b = 1; b <= 40; ++b) {
      const Ordering ab = sharkovskii_cmp(a, b);
      REQUIRE((ab == Ordering::Equal) == (a == b));
      REQUIRE(sharkovskii_cmp(b, a) == flip(ab));
      for (std::uint64_t c = 1; c <= 40; ++c) {
        if (ab == Ordering::Less && sharkovskii_cmp(b, c) == Ordering::Less) {
          REQUIRE(sharkovskii_cmp(a, c) == Ordering::Less);
        }
      }
    }
  }
}

TEST_CASE("a_k examples") {
  CHECK(a_k_recursive(1) == seq("(1)^w"));
  CHECK(a_k_recursive(2) == seq("(10)^w"));
  CHECK(a_k_recursive(4) == seq("(1100)^w"));
  CHECK(a_k_recursive(6) == seq("(110100)^w"));
  CHECK(a_k_explicit(4) == seq("(1100)^w"));
  CHECK(a_k_explicit(3) == seq("(110)^w"));
  CHECK(a_k_explicit(12) == seq("(110100110010)^w"));
  CHECK(a_k_explicit(1) == seq("(1)^w"));
}

TEST_CASE("both constructions agree and have primitive period k") {
  for (std::size_t k = 1; k <= 64; ++k) {
    const PeriodicSeq r = a_k_recursive(k);
    REQUIRE(r == a_k_explicit(k));
    REQUIRE(r.is_purely_periodic());
    if (k >= 2) REQUIRE(r.period().size() == k);
    if (k >= 2) REQUIRE(in_gamma(r));
  }
}

TEST_CASE("a_k is the least periodic member of Gamma with period k") {
  for (std::size_t k = 2; k <= 14; ++k) {
    std::optional<PeriodicSeq> least;
    for (const Necklace& nk : enumerate_primitive_necklaces(k)) {
      const PeriodicSeq s = PeriodicSeq::purely(nk.representative);
      if (!in_gamma(s)) continue;
      if (!least || lex_cmp(s, *least) == Ordering::Less) least = s;
    }
    REQUIRE(least.has_value());
    REQUIRE(*least == a_k_recursive(k));
  }
}

TEST_CASE("a_k order follows the Sharkovskii chain") {
  for (std::size_t k = 2; k <= 30; ++k) {
    for (std::size_t m = 2; m <= 30; ++m) {
      REQUIRE(lex_cmp(a_k_recursive(k), a_k_recursive(m)) == flip(sharkovskii_cmp(k, m)));
    }
  }
  CHECK(lex_cmp(a_k_recursive(3), a_k_recursive(5)) == Ordering::Greater);
  CHECK(lex_cmp(a_k_recursive(5), a_k_recursive(7)) == Ordering::Greater);
}

TEST_CASE("beta_poly examples") {
  CHECK(beta_poly(2) == poly("[-1,-1,1]"));
  CHECK(beta_poly(3) == poly("[-1,-1,-1,1]"));
  CHECK(beta_poly(4) == poly("[-1,0,-1,-1,1]"));
  CHECK(beta_poly(4) == poly("[1,1]") * poly("[-1,1,-2,1]"));
}

TEST_CASE("table rows: digits, polynomials, values and KL flags") {
  for (const Row& row : kTable) {
    CAPTURE(row.n);
    const BetaValue b = beta_n(row.n, 1e-10);
    REQUIRE(b.is_algebraic());
    CHECK(b.to_double() == doctest::Approx(row.value).epsilon(1e-5));
    CHECK(std::abs(b.to_double() - row.value) < 6e-6);
    const GreedyExpansion d = d_of_beta(b);
    CHECK(d.prefix(row.n).str() == row.d);
    CHECK(std::get<GreedyExpansion::Finite>(d.finite_flag()).at == row.n);
    const IntPolynomial m = poly(row.minimal);
    CHECK(divides(m, beta_poly(row.n)));
    CHECK(strip_cyclotomic(beta_poly(row.n)) == m);
    CHECK(b.algebraic().sign_of(m) == 0);
    CHECK(below_KL(row.n) == row.below_kl);
  }
}

TEST_CASE("beta_n examples") {
  CHECK(beta_n(2, 1e-5).to_double() == doctest::Approx(1.61803).epsilon(1e-5));
  CHECK(beta_n(5).to_double() == doctest::Approx(1.81240).epsilon(1e-5));
  CHECK(beta_n(7).to_double() == doctest::Approx(1.80509).epsilon(1e-5));
  const RationalInterval iv = beta_n(5, 1e-9).enclosure(mpq_class(1, 1000000000));
  CHECK(iv.width() < mpq_class(1, 1000000000));
  CHECK_THROWS_AS(beta_n(1), PreconditionViolated);
}

TEST_CASE("the quasi-greedy expansion at beta_k is a_k") {
  for (std::size_t k = 2; k <= 12; ++k) {
    REQUIRE(quasi_greedy(beta_n(k)) == a_k_recursive(k));
  }
}

TEST_CASE("beta_k order follows the Sharkovskii chain") {
  std::vector<BetaValue> b;
  for (std::size_t k = 2; k <= 16; ++k) b.push_back(beta_n(k));
  for (std::size_t k = 2; k <= 16; ++k) {
    for (std::size_t m = 2; m <= 16; ++m) {
      REQUIRE(b[k - 2].compare(b[m - 2]) == flip(sharkovskii_cmp(k, m)));
    }
  }
}

TEST_CASE("powers of two increase towards beta_KL") {
  for (unsigned j = 1; j <= 6; ++j) {
    const std::size_t k = std::size_t{1} << j;
    CAPTURE(k);
    if (j > 1) REQUIRE(beta_n(k / 2).compare(beta_n(k)) == Ordering::Less);
    REQUIRE(below_KL(k));
  }
}

TEST_CASE("beta_KL examples") {
  CHECK(std::abs(beta_KL(1e-5).to_double() - 1.78723) < 1e-5);
  const BetaValue kl = beta_KL(1e-9);
  CHECK(beta_n(8).compare(kl) == Ordering::Less);
  CHECK(beta_n(6).compare(kl) == Ordering::Greater);
  const RationalInterval coarse = beta_KL_bracket(mpq_class(1, 100));
  const RationalInterval fine = beta_KL_bracket(mpq_class(1, 1000000));
  CHECK(std::abs(beta_KL(1e-2).to_double() - 1.787) < 1e-2);
  CHECK(coarse.width() < mpq_class(1, 100));
  CHECK(coarse.lo <= fine.lo);
  CHECK(fine.hi <= coarse.hi);
  CHECK(fine.width() < mpq_class(1, 1000000));
}

TEST_CASE("q_n examples") {
  CHECK(q_n(2).to_double() == doctest::Approx(1.6180339887).epsilon(1e-9));
  CHECK(q_n(3).to_double() == doctest::Approx(1.46557).epsilon(1e-5));
  CHECK(q_n(3).compare(q_n(2)) == Ordering::Less);
  CHECK_THROWS_AS(q_n(1), PreconditionViolated);
}

TEST_CASE("q_n has quasi-greedy expansion (1 0^(n-1))^inf") {
  for (std::size_t n = 2; n <= 10; ++n) {
    std::vector<Bit> bits(n, 0);
    bits[0] = 1;
    REQUIRE(quasi_greedy(q_n(n)) == PeriodicSeq::purely(BinaryWord(std::move(bits))));
    if (n > 2) REQUIRE(q_n(n).compare(q_n(n - 1)) == Ordering::Less);
  }
}
