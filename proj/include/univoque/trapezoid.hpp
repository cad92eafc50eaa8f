#pragma once

// The trapezoidal maps T_beta on [0, 1/(beta-1)]: rise beta*x on L, plateau
// at height 1 on C = [1/beta, 1/(beta(beta-1))], fall beta/(beta-1) - beta*x
// on R. Also the blockwise encoding h of binary sequences into L/R
// itineraries and the continuous extension S_beta of F_beta.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "univoque/beta.hpp"
#include "univoque/words.hpp"

namespace univoque {

enum class Symbol : std::uint8_t { L = 0, C = 1, R = 2 };

char to_char(Symbol s) noexcept;

// Eventually periodic or finite word over {L,C,R}. Periodic values are kept
// canonical as for PeriodicSeq; an empty period means a finite word.
// Text form: `(RL)^w`, `R(L)^w`, `RLLR`.
class Itinerary {
public:
  Itinerary() = default;
  Itinerary(std::vector<Symbol> preperiod, std::vector<Symbol> period);
  static Itinerary finite(std::vector<Symbol> word) { return Itinerary(std::move(word), {}); }
  static Itinerary parse(std::string_view text);

  const std::vector<Symbol>& preperiod() const noexcept { return pre_; }
  const std::vector<Symbol>& period() const noexcept { return per_; }
  bool is_finite() const noexcept { return per_.empty(); }
  bool is_purely_periodic() const noexcept { return pre_.empty() && !per_.empty(); }
  // Finite words only.
  std::size_t size() const noexcept { return pre_.size(); }

  // Symbol at 0-based position i; for finite words i < size().
  Symbol operator[](std::size_t i) const noexcept {
    return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
  }
  std::vector<Symbol> prefix(std::size_t n) const;
  bool contains(Symbol s) const;

  std::string str() const;

  friend bool operator==(const Itinerary&, const Itinerary&) = default;

private:
  std::vector<Symbol> pre_;
  std::vector<Symbol> per_;
};

enum class ClipSide { Left, Right };

// Plateau lowered to beta*x1 (Left, x1 in the L branch) or to
// beta/(beta-1) - beta*x1 (Right, x1 in the R branch). The plateau then
// spans [x1, 1/(beta-1) - x1] or [1/(beta-1) - x1, x1].
struct Clip {
  ClipSide side;
  double x1;
};

struct TrapezoidParams {
  TrapezoidParams(BetaValue beta, std::optional<Clip> clip = std::nullopt);

  BetaValue beta;
  std::optional<Clip> clip;

  double b() const noexcept { return b_; }
  double domain_end() const noexcept { return 1.0 / (b_ - 1.0); }
  double plateau_lo() const noexcept;
  double plateau_hi() const noexcept;
  double plateau_height() const noexcept;

private:
  double b_;
};

inline constexpr double kBoundaryTolerance = 1e-10;

// Throws OutOfDomain outside [0, 1/(beta-1)].
double T_beta(const TrapezoidParams& p, double x);

// First n symbols of the orbit of x. A point within kBoundaryTolerance of a
// plateau endpoint, without being exactly on it, raises BoundaryAmbiguity.
Itinerary itinerary(const TrapezoidParams& p, double x, std::size_t n);

// h: symbol i is R exactly when digit i differs from digit i-1 (digit 0
// taken as 0), which is the blockwise rule 0* -> L h(*),
// 1^a 0^b 1* -> R L^(a-1) R L^(b-1) h(1*), 1^inf -> R L^inf.
Itinerary h_encode(const PeriodicSeq& s);
// Inverse of h_encode. Throws NotInImage for itineraries containing C and
// for finite words.
PeriodicSeq h_decode(const Itinerary& it);

// L < C < R at the first difference, reversed when the common prefix holds
// an odd number of R. Finite words compare on their common length.
Ordering unimodal_cmp(const Itinerary& a, const Itinerary& b);

// The point whose T_beta itinerary is `it` (no C, not finite), obtained by
// solving the affine branch equations. Throws NotInImage if no point of the
// domain carries that itinerary.
double rho_beta(const TrapezoidParams& p, const Itinerary& it);

struct LRCycle {
  Itinerary itinerary;         // period written from its largest rotation
  std::vector<double> points;  // orbit in itinerary order
};

// All cycles of primitive period n avoiding C, one per orbit, sorted by
// itinerary text. Every orbit point lies in its branch with margin
// kBoundaryTolerance. Throws TooLarge for n > 24.
std::vector<LRCycle> find_lr_cycle_orbits(const TrapezoidParams& p, std::size_t n);
std::vector<Itinerary> find_lr_cycles(const TrapezoidParams& p, std::size_t n);

// Continuous extension of F_beta: the gap [1/beta, 1/(beta(beta-1))] is
// filled by the segment from (1/beta, 1) to (1/(beta(beta-1)), (2-beta)/(beta-1)).
double S_beta(double beta, double x);

struct ThreeCycle {
  double x;         // fixed point of S^3
  double lo;        // pi_beta((0011)^inf)
  double hi;        // pi_beta((0110)^inf)
  double residual;  // |S^3(x) - x|
  double s_of_x;    // S(x)
};

// A fixed point of S^3 between pi((0011)^inf) and pi((0110)^inf) found by
// sign bisection. Requires beta > beta_4.
ThreeCycle extension_3cycle(const BetaValue& beta);

// Periods of cycles of T_beta at one parameter, for the 2^n scan.
struct CycleScanRow {
  std::size_t period;
  bool lr_cycle;  // an L-R cycle of this primitive period exists
  bool c_cycle;   // the orbit through C has exactly this period
};
std::vector<CycleScanRow> scan_power_of_two_cycles(const TrapezoidParams& p, unsigned max_exponent);

}  // namespace univoque
