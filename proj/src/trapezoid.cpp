#include "univoque/trapezoid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

#include "univoque/detail/periodic.hpp"
#include "univoque/errors.hpp"
#include "univoque/expansions.hpp"
#include "univoque/thresholds.hpp"

namespace univoque {

char to_char(Symbol s) noexcept {
  switch (s) {
    case Symbol::L: return 'L';
    case Symbol::C: return 'C';
    case Symbol::R: return 'R';
  }
  return '?';
}

namespace {

std::vector<Symbol> symbols_from(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(c == 'L' ? Symbol::L : (c == 'C' ? Symbol::C : Symbol::R));
  return out;
}

std::string text_of(const std::vector<Symbol>& w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(to_char(s));
  return out;
}

}  // namespace

Itinerary::Itinerary(std::vector<Symbol> preperiod, std::vector<Symbol> period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  detail::canonicalize(pre_, per_);
}

Itinerary Itinerary::parse(std::string_view text) {
  const auto raw = detail::split_periodic_text(text, "LCR", true);
  return Itinerary(symbols_from(raw.pre), symbols_from(raw.per));
}

std::vector<Symbol> Itinerary::prefix(std::size_t n) const {
  if (is_finite() && n > pre_.size()) throw PreconditionViolated("prefix longer than the finite itinerary");
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (*this)[i];
  return out;
}

bool Itinerary::contains(Symbol s) const {
  return std::find(pre_.begin(), pre_.end(), s) != pre_.end() ||
         std::find(per_.begin(), per_.end(), s) != per_.end();
}

std::string Itinerary::str() const { return detail::join_periodic_text(text_of(pre_), text_of(per_)); }

TrapezoidParams::TrapezoidParams(BetaValue beta_, std::optional<Clip> clip_)
    : beta(std::move(beta_)), clip(clip_), b_(beta.to_double()) {
  if (!clip) return;
  const double x1 = clip->x1;
  const bool ok = clip->side == ClipSide::Left ? (x1 > 0.0 && x1 <= 1.0 / b_)
                                               : (x1 >= 1.0 / (b_ * (b_ - 1.0)) && x1 < domain_end());
  if (!ok) throw PreconditionViolated("clip point outside its outer branch");
}

double TrapezoidParams::plateau_lo() const noexcept {
  if (!clip) return 1.0 / b_;
  return clip->side == ClipSide::Left ? clip->x1 : domain_end() - clip->x1;
}

double TrapezoidParams::plateau_hi() const noexcept {
  if (!clip) return 1.0 / (b_ * (b_ - 1.0));
  return clip->side == ClipSide::Left ? domain_end() - clip->x1 : clip->x1;
}

double TrapezoidParams::plateau_height() const noexcept {
  if (!clip) return 1.0;
  return clip->side == ClipSide::Left ? b_ * clip->x1 : b_ / (b_ - 1.0) - b_ * clip->x1;
}

double T_beta(const TrapezoidParams& p, double x) {
  const double end = p.domain_end();
  if (!(x >= 0.0) || x > end * (1.0 + 1e-12)) throw OutOfDomain("T_beta: x outside [0, 1/(beta-1)]");
  const double b = p.b();
  if (x < p.plateau_lo()) return b * x;
  if (x <= p.plateau_hi()) return p.plateau_height();
  return std::max(0.0, b / (b - 1.0) - b * x);
}

Itinerary itinerary(const TrapezoidParams& p, double x, std::size_t n) {
  const double lo = p.plateau_lo();
  const double hi = p.plateau_hi();
  std::vector<Symbol> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((x != lo && std::abs(x - lo) < kBoundaryTolerance) || (x != hi && std::abs(x - hi) < kBoundaryTolerance)) {
      throw BoundaryAmbiguity("iterate " + std::to_string(i) + " lies within tolerance of a plateau endpoint");
    }
    out.push_back(x < lo ? Symbol::L : (x <= hi ? Symbol::C : Symbol::R));
    x = T_beta(p, x);
  }
  return Itinerary::finite(std::move(out));
}

Itinerary h_encode(const PeriodicSeq& s) {
  const std::size_t r = s.preperiod().size();
  const std::size_t q = s.period().size();
  // Symbol i depends on digits i-1 and i, so it is periodic from index r+1.
  std::vector<Symbol> all(r + 1 + q);
  Bit prev = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = s[i] != prev ? Symbol::R : Symbol::L;
    prev = s[i];
  }
  std::vector<Symbol> pre(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(r + 1));
  std::vector<Symbol> per(all.begin() + static_cast<std::ptrdiff_t>(r + 1), all.end());
  return Itinerary(std::move(pre), std::move(per));
}

PeriodicSeq h_decode(const Itinerary& it) {
  if (it.is_finite()) throw NotInImage("h_decode needs an infinite itinerary, got " + it.str());
  if (it.contains(Symbol::C)) throw NotInImage("itinerary " + it.str() + " passes through C");
  Bit state = 0;
  auto next = [&](Symbol s) {
    if (s == Symbol::R) state = static_cast<Bit>(1 - state);
    return state;
  };
  std::vector<Bit> pre;
  for (Symbol s : it.preperiod()) pre.push_back(next(s));
  // The period may need two passes before the digit state returns.
  std::vector<Bit> per;
  for (int pass = 0; pass < 2; ++pass) {
    for (Symbol s : it.period()) per.push_back(next(s));
  }
  return PeriodicSeq(BinaryWord(std::move(pre)), BinaryWord(std::move(per)));
}

Ordering unimodal_cmp(const Itinerary& a, const Itinerary& b) {
  std::size_t cap;
  if (a.is_finite() || b.is_finite()) {
    cap = a.is_finite() ? a.size() : b.size();
    if (a.is_finite() && b.is_finite()) cap = std::min(a.size(), b.size());
  } else {
    cap = a.preperiod().size() + b.preperiod().size() + std::lcm(a.period().size(), b.period().size());
  }
  bool odd = false;
  for (std::size_t i = 0; i < cap; ++i) {
    const Symbol x = a[i];
    const Symbol y = b[i];
    if (x != y) {
      const Ordering o = x < y ? Ordering::Less : Ordering::Greater;
      return odd ? flip(o) : o;
    }
    if (x == Symbol::R) odd = !odd;
  }
  return Ordering::Equal;
}

namespace {

struct Affine {
  long double a = 1.0L;
  long double c = 0.0L;
};

Affine branch(long double b, Symbol s) {
  return s == Symbol::L ? Affine{b, 0.0L} : Affine{-b, b / (b - 1.0L)};
}

long double apply(const Affine& f, long double x) { return f.a * x + f.c; }

// g after f.
Affine then(const Affine& f, const Affine& g) { return {g.a * f.a, g.a * f.c + g.c}; }

long double fixed_point(long double b, std::span<const Symbol> word) {
  Affine f;
  for (Symbol s : word) f = then(f, branch(b, s));
  return f.c / (1.0L - f.a);
}

bool in_branch(const TrapezoidParams& p, Symbol s, long double x, long double margin) {
  const long double end = p.domain_end();
  if (s == Symbol::L) return x >= -margin && x < p.plateau_lo() - margin;
  if (s == Symbol::R) return x > p.plateau_hi() + margin && x <= end + margin;
  return false;
}

}  // namespace

double rho_beta(const TrapezoidParams& p, const Itinerary& it) {
  if (it.is_finite() || it.contains(Symbol::C)) {
    throw NotInImage("rho_beta needs an infinite L/R itinerary, got " + it.str());
  }
  const long double b = p.b();
  long double y = fixed_point(b, it.period());
  const auto& pre = it.preperiod();
  for (std::size_t i = pre.size(); i-- > 0;) {
    y = pre[i] == Symbol::L ? y / b : (b / (b - 1.0L) - y) / b;
  }
  // Check the branches along one full pass through preperiod and period.
  long double x = y;
  const std::size_t len = pre.size() + it.period().size();
  for (std::size_t i = 0; i < len; ++i) {
    if (!in_branch(p, it[i], x, -1e-9L)) {
      throw NotInImage("no point of the domain has itinerary " + it.str());
    }
    x = apply(branch(b, it[i]), x);
  }
  return static_cast<double>(y);
}

std::vector<LRCycle> find_lr_cycle_orbits(const TrapezoidParams& p, std::size_t n) {
  if (n == 0) throw PreconditionViolated("cycle length must be positive");
  if (n > 24) throw TooLarge("cycle search limited to n <= 24");
  const long double b = p.b();
  std::vector<LRCycle> out;
  std::vector<Symbol> w(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) w[i] = (mask >> (n - 1 - i)) & 1 ? Symbol::R : Symbol::L;
    if (detail::primitive_root_length(std::span<const Symbol>(w)) != n) continue;
    bool largest = true;
    std::vector<Symbol> rot(w);
    for (std::size_t r = 1; r < n && largest; ++r) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      largest = !(w < rot);
    }
    if (!largest) continue;
    long double x = fixed_point(b, w);
    std::vector<double> points;
    points.reserve(n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = in_branch(p, w[i], x, kBoundaryTolerance);
      points.push_back(static_cast<double>(x));
      x = apply(branch(b, w[i]), x);
    }
    if (ok) out.push_back({Itinerary({}, w), std::move(points)});
  }
  std::sort(out.begin(), out.end(),
            [](const LRCycle& a, const LRCycle& c) { return a.itinerary.str() < c.itinerary.str(); });
  return out;
}

std::vector<Itinerary> find_lr_cycles(const TrapezoidParams& p, std::size_t n) {
  std::vector<Itinerary> out;
  for (auto& c : find_lr_cycle_orbits(p, n)) out.push_back(std::move(c.itinerary));
  return out;
}

double S_beta(double b, double x) {
  const double end = 1.0 / (b - 1.0);
  if (!(x >= 0.0) || x > end * (1.0 + 1e-12)) throw OutOfDomain("S_beta: x outside [0, 1/(beta-1)]");
  const double x0 = 1.0 / b;
  const double x1 = 1.0 / (b * (b - 1.0));
  if (x < x0) return b * x;
  if (x > x1) return b * x - 1.0;
  const double y1 = (2.0 - b) / (b - 1.0);
  return 1.0 + (y1 - 1.0) * (x - x0) / (x1 - x0);
}

ThreeCycle extension_3cycle(const BetaValue& beta) {
  if (beta.compare(beta_n(4)) != Ordering::Greater) {
    throw PreconditionViolated("extension_3cycle needs beta > beta_4 = 1.75488");
  }
  const double b = beta.to_double();
  auto g = [b](double x) { return S_beta(b, S_beta(b, S_beta(b, x))) - x; };
  ThreeCycle out{};
  out.lo = pi_beta(beta, PeriodicSeq::parse("(0011)^w"));
  out.hi = pi_beta(beta, PeriodicSeq::parse("(0110)^w"));
  double lo = out.lo;
  double hi = out.hi;
  const bool lo_positive = g(lo) > 0;
  if (lo_positive == (g(hi) > 0)) throw Error("S^3(x) - x has no sign change between the two 4-cycle points");
  for (;;) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (gm == 0.0) {
      lo = hi = mid;
      break;
    }
    ((gm > 0) == lo_positive ? lo : hi) = mid;
  }
  out.x = std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
  out.residual = std::abs(g(out.x));
  out.s_of_x = S_beta(b, out.x);
  return out;
}

std::vector<CycleScanRow> scan_power_of_two_cycles(const TrapezoidParams& p, unsigned max_exponent) {
  if (max_exponent > 4) throw TooLarge("scan limited to periods up to 16");
  const std::size_t limit = std::size_t{1} << max_exponent;
  // The orbit through C is the orbit of the plateau height.
  std::size_t c_period = 0;
  double y = p.plateau_height();
  for (std::size_t j = 0; j < limit; ++j) {
    if (y >= p.plateau_lo() && y <= p.plateau_hi()) {
      c_period = j + 1;
      break;
    }
    y = T_beta(p, y);
  }
  std::vector<CycleScanRow> rows;
  for (unsigned e = 1; e <= max_exponent; ++e) {
    const std::size_t period = std::size_t{1} << e;
    rows.push_back({period, !find_lr_cycle_orbits(p, period).empty(), c_period == period});
  }
  return rows;
}

}  // namespace univoque
