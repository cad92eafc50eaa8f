#include "univoque/oracle.hpp"

#include <algorithm>

#include "univoque/errors.hpp"
#include "univoque/expansions.hpp"
#include "univoque/thresholds.hpp"

namespace univoque {

std::vector<Necklace> enumerate_primitive_necklaces(std::size_t n) {
  if (n == 0) throw PreconditionViolated("necklace length must be positive");
  if (n > 24) throw TooLarge("necklace enumeration limited to n <= 24");
  // Lyndon words (least rotations) in lexicographic order; the complement of
  // a least rotation is the largest rotation of the complementary class.
  std::vector<Necklace> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    const std::size_t m = w.size();
    if (m == n) {
      std::vector<Bit> rep(n);
      for (std::size_t i = 0; i < n; ++i) rep[i] = static_cast<Bit>(1 - w[i]);
      out.push_back({BinaryWord(std::move(rep)), n});
    }
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == 1) w.pop_back();
  }
  std::sort(out.begin(), out.end(),
            [](const Necklace& a, const Necklace& b) { return a.representative < b.representative; });
  return out;
}

std::uint64_t primitive_necklace_count(std::size_t n) {
  if (n == 0 || n > 62) throw PreconditionViolated("necklace count needs 1 <= n <= 62");
  auto mobius = [](std::size_t d) {
    int sign = 1;
    for (std::size_t p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      d /= p;
      if (d % p == 0) return 0;
      sign = -sign;
    }
    if (d > 1) sign = -sign;
    return sign;
  };
  std::int64_t total = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) total += mobius(d) * (std::int64_t{1} << (n / d));
  }
  return static_cast<std::uint64_t>(total) / n;
}

std::optional<PeriodicSeq> find_period_n_unique(const BetaValue& beta, std::size_t n) {
  const GreedyExpansion d = d_of_beta(beta);
  for (const Necklace& nk : enumerate_primitive_necklaces(n)) {
    PeriodicSeq s = PeriodicSeq::purely(nk.representative);
    if (is_unique_expansion(d, s)) return s;
  }
  return std::nullopt;
}

bool exists_period_n_unique(const BetaValue& beta, std::size_t n) {
  return find_period_n_unique(beta, n).has_value();
}

namespace {

struct Probe {
  std::optional<PeriodicSeq> witness;
  std::size_t retries = 0;
};

// Membership at beta = x. An undecided answer is retried with exact digits
// (tolerance 0), then at x + 1e-9.
Probe probe(mpq_class x, std::size_t n) {
  Probe out;
  const mpq_class nudge(1, 1000000000);
  for (int attempt = 0;; ++attempt) {
    try {
      out.witness = find_period_n_unique(BetaValue::from_rational(x), n);
      return out;
    } catch (const Undecided&) {
      ++out.retries;
    }
    try {
      out.witness = find_period_n_unique(BetaValue::from_rational(x, 0.0), n);
      return out;
    } catch (const Undecided&) {
      if (attempt == 3) throw;
    }
    x += nudge;
  }
}

}  // namespace

MinBetaResult min_beta_for_period(std::size_t n, double eps) {
  if (n < 2 || n > 16) throw PreconditionViolated("min_beta_for_period needs 2 <= n <= 16");
  if (!(eps > 0)) throw PreconditionViolated("eps must be positive");
  MinBetaResult r;
  r.n = n;
  const mpq_class lo0(3, 2);
  const mpq_class hi0 = mpq_class(2) - mpq_class(1, 1024);

  // The predicate should be monotone; look at 8 evenly spaced points first.
  bool seen_true = false;
  for (int i = 0; i < 8; ++i) {
    const mpq_class x = lo0 + (hi0 - lo0) * mpq_class(i, 7);
    Probe p = probe(x, n);
    r.retries += p.retries;
    const bool v = p.witness.has_value();
    if (seen_true && !v) r.anomalies.push_back("predicate false at " + format_rational(x) + " after a true sample");
    seen_true = seen_true || v;
  }

  Probe top = probe(hi0, n);
  r.retries += top.retries;
  if (!top.witness) throw Error("no unique expansion of period " + std::to_string(n) + " below 2");
  Probe bottom = probe(lo0, n);
  r.retries += bottom.retries;
  if (bottom.witness) throw Error("unique expansion of period " + std::to_string(n) + " already at 3/2");

  r.lo = lo0;
  r.hi = hi0;
  r.witness = *top.witness;
  const mpq_class width(eps);
  while (!(r.hi - r.lo < width)) {
    const mpq_class mid = (r.lo + r.hi) / 2;
    Probe p = probe(mid, n);
    r.retries += p.retries;
    if (p.witness) {
      r.hi = mid;
      r.witness = *p.witness;
    } else {
      r.lo = mid;
    }
  }
  return r;
}

OrderingReport verify_ordering(std::size_t N) {
  if (N < 2 || N > 30) throw PreconditionViolated("verify_ordering needs 2 <= N <= 30");
  OrderingReport report;
  report.max_n = N;
  std::vector<BetaValue> betas;
  for (std::size_t k = 2; k <= N; ++k) betas.push_back(beta_n(k, 1e-6));
  auto at = [&](std::size_t k) -> const BetaValue& { return betas[k - 2]; };

  for (std::size_t k = 2; k <= N; ++k) {
    for (std::size_t m = k + 1; m <= N; ++m) {
      const Ordering numeric = at(k).compare(at(m));
      const Ordering expected = flip(sharkovskii_cmp(k, m));
      if (numeric != expected) report.violations.push_back({k, m, numeric, expected});
    }
  }

  std::vector<std::size_t> order;
  for (std::size_t k = 2; k <= N; ++k) order.push_back(k);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return at(a).compare(at(b)) == Ordering::Less; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t k = order[i];
    const RationalInterval iv = at(k).algebraic().interval();
    report.chain.push_back({k, iv.lo, iv.hi, a_k_recursive(k), i});
  }
  return report;
}

}  // namespace univoque
