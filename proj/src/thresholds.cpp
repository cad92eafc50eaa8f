#include "univoque/thresholds.hpp"

#include <bit>
#include <mutex>
#include <optional>

#include "univoque/errors.hpp"

namespace univoque {

SharkovskiiKey decompose(std::uint64_t k) {
  if (k == 0) throw PreconditionViolated("decompose needs k >= 1");
  const unsigned n = static_cast<unsigned>(std::countr_zero(k));
  return {n, ((k >> n) - 1) / 2};
}

Ordering sharkovskii_cmp(std::uint64_t k, std::uint64_t l) {
  if (k == l) return Ordering::Equal;
  const SharkovskiiKey a = decompose(k);
  const SharkovskiiKey b = decompose(l);
  const bool pa = a.m == 0;
  const bool pb = b.m == 0;
  if (pa != pb) return pa ? Ordering::Greater : Ordering::Less;
  if (pa) return a.n > b.n ? Ordering::Less : Ordering::Greater;
  if (a.n != b.n) return a.n < b.n ? Ordering::Less : Ordering::Greater;
  return a.m < b.m ? Ordering::Less : Ordering::Greater;
}

PeriodicSeq a_k_recursive(std::size_t k) {
  if (k == 0) throw PreconditionViolated("a_k needs k >= 1");
  if (k == 1) return PeriodicSeq::parse("(1)^w");
  const SharkovskiiKey key = decompose(k);
  PeriodicSeq s = PeriodicSeq::parse("(0)^w");
  if (key.m > 0) {
    BinaryWord w{std::vector<Bit>{1}};
    for (std::uint64_t i = 0; i < key.m; ++i) w.append(BinaryWord({1, 0}));
    s = PeriodicSeq::purely(w);
  }
  for (unsigned i = 0; i < key.n; ++i) s = mu(s);
  return s;
}

PeriodicSeq a_k_explicit(std::size_t k) {
  if (k == 0) throw PreconditionViolated("a_k needs k >= 1");
  if (k == 1) return PeriodicSeq::parse("(1)^w");
  const SharkovskiiKey key = decompose(k);
  const std::size_t two_n = std::size_t{1} << key.n;
  // m_i for i >= 1.
  auto tm = [](std::size_t i) { return thue_morse_symbol(i); };
  std::vector<Bit> per;
  per.reserve(k);
  if (key.m == 0) {
    for (std::size_t i = 1; i < two_n; ++i) per.push_back(tm(i));
    per.push_back(static_cast<Bit>(1 - tm(two_n)));
  } else {
    for (std::size_t i = 1; i <= 3 * two_n; ++i) per.push_back(tm(i));
    for (std::uint64_t r = 1; r < key.m; ++r) {
      for (std::size_t i = 1; i < 2 * two_n; ++i) per.push_back(tm(i));
      per.push_back(static_cast<Bit>(1 - tm(2 * two_n)));
    }
  }
  return PeriodicSeq::purely(BinaryWord(std::move(per)));
}

IntPolynomial beta_poly(std::size_t k) {
  if (k < 2) throw PreconditionViolated("beta_poly needs k >= 2");
  const BinaryWord a = a_k_recursive(k).period();
  std::vector<mpz_class> c(k + 1, 0);
  c[k] = 1;
  c[0] = -1;
  for (std::size_t i = 1; i < k; ++i) c[k - i] = -static_cast<int>(a[i - 1]);
  return IntPolynomial(std::move(c));
}

IntPolynomial strip_cyclotomic(const IntPolynomial& p) {
  IntPolynomial r = p.primitive();
  const int bound = 2 * std::max(r.degree(), 1);
  for (int j = 1; j <= bound; ++j) {
    IntPolynomial xj = IntPolynomial::monomial(static_cast<std::size_t>(j));
    xj = xj - IntPolynomial{1};
    for (;;) {
      const IntPolynomial g = gcd(r, xj);
      if (g.degree() < 1) break;
      r = exact_quotient(r, g).value().primitive();
    }
  }
  return r;
}

BetaValue beta_n(std::size_t k, double eps) {
  if (!(eps > 0)) throw PreconditionViolated("eps must be positive");
  AlgebraicReal a(beta_poly(k), 1, 2);
  a.refine(mpq_class(eps));
  return BetaValue::algebraic(std::move(a));
}

namespace {

// Sign of sum_{k>=1} m_k x^-k - 1 at rational x > 1, or nullopt when n
// terms cannot settle it.
std::optional<int> kl_sign(const mpq_class& x, std::size_t n) {
  const mpq_class inv = 1 / x;
  mpq_class w = 1;
  mpq_class sum = -1;
  for (std::size_t k = 1; k <= n; ++k) {
    w *= inv;
    if (thue_morse_symbol(k)) sum += w;
  }
  // 0 <= tail <= x^-n / (x-1)
  if (sum > 0) return 1;
  if (sum + w / (x - 1) < 0) return -1;
  return std::nullopt;
}

int kl_sign(const mpq_class& x) {
  for (std::size_t n = 32;; n *= 2) {
    if (auto s = kl_sign(x, n)) return *s;
  }
}

struct KlCache {
  std::mutex mutex;
  mpq_class lo{3, 2};
  mpq_class hi{2};
};

KlCache& kl_cache() {
  static KlCache cache;
  return cache;
}

}  // namespace

RationalInterval beta_KL_bracket(const mpq_class& width) {
  if (!(width > 0)) throw PreconditionViolated("width must be positive");
  KlCache& c = kl_cache();
  std::lock_guard lock(c.mutex);
  // The sum is decreasing in x, positive at 3/2 and negative at 2.
  while (!(c.hi - c.lo < width)) {
    mpq_class mid = (c.lo + c.hi) / 2;
    (kl_sign(mid) > 0 ? c.lo : c.hi) = mid;
  }
  return {c.lo, c.hi};
}

BetaValue beta_KL(double eps) {
  if (!(eps > 0)) throw PreconditionViolated("eps must be positive");
  return BetaValue::from_rational(beta_KL_bracket(mpq_class(eps)).midpoint());
}

bool below_KL(std::size_t k) {
  const BetaValue b = beta_n(k, 1e-3);
  mpq_class width(1, 1 << 20);
  for (;;) {
    const RationalInterval kl = beta_KL_bracket(width);
    const RationalInterval iv = b.enclosure(width);
    if (iv.hi < kl.lo) return true;
    if (kl.hi < iv.lo) return false;
    width /= 256;
  }
}

BetaValue q_n(std::size_t n, double eps) {
  if (n < 2) throw PreconditionViolated("q_n needs n >= 2");
  if (!(eps > 0)) throw PreconditionViolated("eps must be positive");
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  c[n - 1] = -1;
  c[0] = -1;
  AlgebraicReal a(IntPolynomial(std::move(c)), 1, 2);
  a.refine(mpq_class(eps));
  return BetaValue::algebraic(std::move(a));
}

}  // namespace univoque
