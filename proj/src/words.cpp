#include "univoque/words.hpp"

#include <algorithm>
#include <numeric>

#include "univoque/detail/periodic.hpp"
#include "univoque/errors.hpp"

namespace univoque {

std::string_view to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "?";
}

BinaryWord::BinaryWord(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (Bit b : bits_) {
    if (b > 1) throw PreconditionViolated("binary word symbol must be 0 or 1");
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("not a binary word: '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

void BinaryWord::push_back(Bit b) {
  if (b > 1) throw PreconditionViolated("binary word symbol must be 0 or 1");
  bits_.push_back(b);
}

void BinaryWord::append(const BinaryWord& w) {
  bits_.insert(bits_.end(), w.bits_.begin(), w.bits_.end());
}

BinaryWord BinaryWord::substr(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, bits_.size());
  len = std::min(len, bits_.size() - pos);
  return BinaryWord(std::vector<Bit>(bits_.begin() + pos, bits_.begin() + pos + len));
}

BinaryWord BinaryWord::complement() const {
  std::vector<Bit> out(bits_.size());
  std::transform(bits_.begin(), bits_.end(), out.begin(),
                 [](Bit b) { return static_cast<Bit>(1 - b); });
  return BinaryWord(std::move(out));
}

std::size_t BinaryWord::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), Bit{1}));
}

std::string BinaryWord::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

BinaryWord operator+(BinaryWord a, const BinaryWord& b) {
  a.append(b);
  return a;
}

PeriodicSeq::PeriodicSeq(BinaryWord preperiod, BinaryWord period) {
  if (period.empty()) throw PreconditionViolated("period must be nonempty");
  std::vector<Bit> pre(preperiod.begin(), preperiod.end());
  std::vector<Bit> per(period.begin(), period.end());
  detail::canonicalize(pre, per);
  pre_ = BinaryWord(std::move(pre));
  per_ = BinaryWord(std::move(per));
}

PeriodicSeq PeriodicSeq::parse(std::string_view text) {
  const auto raw = detail::split_periodic_text(text, "01", false);
  return PeriodicSeq(BinaryWord::parse(raw.pre), BinaryWord::parse(raw.per));
}

BinaryWord PeriodicSeq::prefix(std::size_t n) const {
  std::vector<Bit> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (*this)[i];
  return BinaryWord(std::move(out));
}

std::string PeriodicSeq::str() const {
  return detail::join_periodic_text(pre_.str(), per_.str());
}

Ordering lex_cmp(const PeriodicSeq& a, const PeriodicSeq& b) {
  const std::size_t cap = a.preperiod().size() + b.preperiod().size() +
                          std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < cap; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

PeriodicSeq shift(const PeriodicSeq& s, std::size_t j) {
  const auto& pre = s.preperiod();
  const auto& per = s.period();
  if (j < pre.size()) return PeriodicSeq(pre.substr(j, pre.size() - j), per);
  const std::size_t r = (j - pre.size()) % per.size();
  return PeriodicSeq::purely(per.substr(r, per.size() - r) + per.substr(0, r));
}

PeriodicSeq mirror(const PeriodicSeq& s) {
  return PeriodicSeq(s.preperiod().complement(), s.period().complement());
}

BinaryWord thue_morse(std::size_t n) {
  std::vector<Bit> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = thue_morse_symbol(k);
  return BinaryWord(std::move(out));
}

BinaryWord phi_morphism(const BinaryWord& w) {
  std::vector<Bit> out;
  out.reserve(2 * w.size());
  for (Bit b : w) {
    out.push_back(b);
    out.push_back(static_cast<Bit>(1 - b));
  }
  return BinaryWord(std::move(out));
}

namespace {

BinaryWord pairs(const BinaryWord& w) {
  return phi_morphism(w);  // e -> e (1-e) is exactly the morphism
}

}  // namespace

PeriodicSeq mu(const PeriodicSeq& s) {
  BinaryWord pre;
  pre.push_back(1);
  pre.append(pairs(s.preperiod()));
  return PeriodicSeq(std::move(pre), pairs(s.period()));
}

BinaryWord mu(const BinaryWord& prefix) {
  BinaryWord out;
  out.push_back(1);
  out.append(pairs(prefix));
  return out;
}

bool in_gamma(const PeriodicSeq& s) {
  const PeriodicSeq lower = mirror(s);
  const std::size_t shifts = s.preperiod().size() + s.period().size();
  for (std::size_t k = 0; k < shifts; ++k) {
    const PeriodicSeq t = shift(s, k);
    if (lex_cmp(t, s) == Ordering::Greater) return false;
    if (lex_cmp(lower, t) == Ordering::Greater) return false;
  }
  return true;
}

std::optional<BinaryWord> detect_halfmirror(const BinaryWord& u) {
  if (u.size() % 2 != 0) return std::nullopt;
  const std::size_t half = u.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    if (u[i] == u[half + i]) return std::nullopt;
  }
  return u.substr(0, half);
}

PeriodicSeq resolve_square(const BinaryWord& v) {
  if (v.empty() || v.back() != 1) {
    throw PreconditionViolated("resolve_square needs a word ending in 1");
  }
  BinaryWord w0 = v.substr(0, v.size() - 1);
  w0.push_back(0);
  return PeriodicSeq::purely(std::move(w0));
}

}  // namespace univoque
