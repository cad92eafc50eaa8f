#include "univoque/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

#include "univoque/errors.hpp"

namespace univoque {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  c_.reserve(coefficients.size());
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::size_t n, long coefficient) {
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = coefficient;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  auto fail = [&] { throw ParseError("expected [c0,c1,...], got '" + std::string(text) + "'"); };
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') fail();
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<mpz_class> c;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string item(body.substr(0, comma));
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) fail();
    mpz_class v;
    if (v.set_str(item, 10) != 0) fail();
    c.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) fail();
  }
  IntPolynomial p(std::move(c));
  if (p.is_zero()) throw ParseError("zero polynomial in '" + std::string(text) + "'");
  return p;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  if (c_.empty()) return 0;
  // Homogeneous Horner: sum c_i a^i b^(d-i) has the sign of p(a/b) for b > 0.
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  mpz_class acc = c_.back();
  mpz_class bpow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + c_[i] * bpow;
  }
  return sgn(acc);
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

double IntPolynomial::eval(double x) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) g = ::gcd(g, v);
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (c_.empty()) return {};
  mpz_class g = content();
  if (c_.back() < 0) g = -g;
  std::vector<mpz_class> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += c_[i].get_str();
  }
  return s + "]";
}

std::string IntPolynomial::pretty() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpz_class& v = c_[i];
    if (v == 0) continue;
    const mpz_class mag = abs(v);
    if (s.empty()) {
      if (v < 0) s += '-';
    } else {
      s += v < 0 ? '-' : '+';
    }
    const bool unit = mag == 1;
    if (!unit || i == 0) s += mag.get_str();
    if (i >= 1) s += 'x';
    if (i >= 2) s += '^' + std::to_string(i);
  }
  return s;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const mpz_class& k, const IntPolynomial& a) {
  std::vector<mpz_class> c(a.c_);
  for (auto& v : c) v *= k;
  return IntPolynomial(std::move(c));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionViolated("pseudo_remainder by the zero polynomial");
  std::vector<mpz_class> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const mpz_class lb = abs(bc.back());
  const int sb = sgn(bc.back());
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    const mpz_class lr = r.back() * sb;
    for (auto& v : r) v *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lr * bc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionViolated("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpq_class> r(a.coefficients().begin(), a.coefficients().end());
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<mpq_class> q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    const mpq_class t = r[i] / bc.back();
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  std::vector<mpz_class> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) return std::nullopt;
    out[i] = q[i].get_num();
  }
  return IntPolynomial(std::move(out));
}

bool divides(const IntPolynomial& divisor, const IntPolynomial& p) {
  return exact_quotient(p, divisor).has_value();
}

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive();
  const IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p.primitive();
  return exact_quotient(p.primitive(), g).value().primitive();
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  std::vector<IntPolynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  IntPolynomial d = p.derivative();
  while (!d.is_zero()) {
    chain.push_back(d);
    const auto& prev = chain[chain.size() - 2];
    IntPolynomial r = pseudo_remainder(prev, chain.back());
    if (r.is_zero()) break;
    // -rem scaled by the positive constant 1/content keeps the sign pattern.
    const mpz_class g = r.content();
    std::vector<mpz_class> c = r.coefficients();
    for (auto& v : c) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      v = -v;
    }
    d = IntPolynomial(std::move(c));
  }
  return chain;
}

namespace {

std::size_t sign_variations(const std::vector<IntPolynomial>& chain, const mpq_class& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::size_t count_real_roots(const IntPolynomial& p, const mpq_class& a, const mpq_class& b) {
  if (!(a < b)) throw PreconditionViolated("count_real_roots needs a < b");
  if (p.sign_at(a) == 0 || p.sign_at(b) == 0) {
    throw PreconditionViolated("count_real_roots: interval endpoint is a root");
  }
  const auto chain = sturm_chain(p);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

mpq_class parse_rational(std::string_view text) {
  auto fail = [&] { throw ParseError("not a rational number: '" + std::string(text) + "'"); };
  std::string s(text);
  if (s.empty()) fail();
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) fail();
    q.canonicalize();
    return q;
  }
  // Decimal with optional exponent, e.g. -1.25, 1e-8, 2.5E+3.
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) fail();
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') fail();
    ++pos;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      fail();
    }
    if (pos + used != s.size()) fail();
    exponent += e;
  }
  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  mpq_class q = exponent >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

std::string format_rational(const mpq_class& q) {
  // A finite decimal exists iff the reduced denominator is 2^a 5^b.
  mpz_class den = q.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1) return q.get_num().get_str() + "/" + q.get_den().get_str();
  const unsigned long places = std::max(twos, fives);
  if (places == 0) return q.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = q.get_num() * scale / q.get_den();
  const bool negative = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

}  // namespace univoque
