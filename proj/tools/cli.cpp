#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "univoque/errors.hpp"
#include "univoque/expansions.hpp"
#include "univoque/oracle.hpp"
#include "univoque/polynomial.hpp"
#include "univoque/thresholds.hpp"
#include "univoque/trapezoid.hpp"

namespace univoque::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kEpsEnv = "UNIVOQUE_EPS";
constexpr int kDisplayPlaces = 5;

struct Cell {
  std::string text;
  Json json;
};

Cell cell(std::string s) { return {s, Json(s)}; }
Cell cell(const char* s) { return cell(std::string(s)); }
Cell cell(std::size_t v) { return {std::to_string(v), Json(v)}; }
Cell cell(bool v) { return {v ? "true" : "false", Json(v)}; }
Cell number(double v, int places = 12) {
  std::ostringstream os;
  os << std::setprecision(places) << v;
  return {os.str(), Json(v)};
}

// Columns and rows for text/csv; JSON is the rows as objects unless a
// command supplies its own document.
struct Result {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<Json> json;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Result& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    if (r.json) {
      out << r.json->dump(2) << "\n";
      return;
    }
    Json arr = Json::array();
    for (const auto& row : r.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < r.columns.size(); ++i) obj[r.columns[i]] = row[i].json;
      arr.push_back(std::move(obj));
    }
    out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_escape(r.columns[i]);
    out << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i].text);
      out << "\n";
    }
    return;
  }
  if (r.rows.size() == 1) {
    std::size_t w = 0;
    for (const auto& c : r.columns) w = std::max(w, c.size());
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(w)) << r.columns[i] << "  " << r.rows[0][i].text << "\n";
    }
    return;
  }
  std::vector<std::size_t> widths(r.columns.size());
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    widths[i] = r.columns[i].size();
    for (const auto& row : r.rows) widths[i] = std::max(widths[i], row[i].text.size());
  }
  auto line = [&](auto get) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      if (i) out << "  ";
      const std::string& s = get(i);
      out << s;
      if (i + 1 < r.columns.size()) out << std::string(widths[i] - s.size(), ' ');
    }
    out << "\n";
  };
  line([&](std::size_t i) -> const std::string& { return r.columns[i]; });
  for (const auto& row : r.rows) line([&](std::size_t i) -> const std::string& { return row[i].text; });
}

// Rounds to `places` decimals, half away from zero.
std::string fixed(const mpq_class& q, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpq_class scaled = abs(q) * scale + mpq_class(1, 2);
  mpz_class n = scaled.get_num() / scaled.get_den();
  std::string digits = n.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) digits.insert(0, places - digits.size() + 1, '0');
  if (places > 0) digits.insert(digits.size() - places, ".");
  return (q < 0 && n != 0 ? "-" : "") + digits;
}

std::string fixed(const BetaValue& b, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places + 3));
  return fixed(b.enclosure(mpq_class(1) / mpq_class(scale)).midpoint(), places);
}

BetaValue parse_beta(const std::string& text) {
  if (text.starts_with("float:") || text.starts_with("poly:")) return BetaValue::parse(text);
  return BetaValue::parse("float:" + text);
}

double default_eps() {
  if (const char* env = std::getenv(kEpsEnv); env && *env) {
    try {
      const double v = parse_rational(env).get_d();
      if (v > 0) return v;
    } catch (const Error&) {
    }
    throw PreconditionViolated(std::string(kEpsEnv) + " must be a positive number");
  }
  return kDefaultRootEps;
}

std::string flag_text(const GreedyExpansion::Flag& f) {
  if (const auto* x = std::get_if<GreedyExpansion::Finite>(&f)) return "finite@" + std::to_string(x->at);
  if (std::holds_alternative<GreedyExpansion::Infinite>(f)) return "infinite";
  return "unknown@" + std::to_string(std::get<GreedyExpansion::Unknown>(f).budget);
}

Result cmd_table(std::size_t n_max) {
  if (n_max < 2) throw PreconditionViolated("table needs n_max >= 2");
  Result r;
  r.columns = {"n", "d_beta_n", "defining_poly", "minimal_poly_if_divides", "beta_n", "below_KL"};
  for (std::size_t n = 2; n <= n_max; ++n) {
    const BetaValue b = beta_n(n, 1e-8);
    const GreedyExpansion d = d_of_beta(b);
    const auto flag = d.finite_flag();
    std::string dword;
    if (const auto* f = std::get_if<GreedyExpansion::Finite>(&flag)) dword = d.prefix(f->at).str();
    const IntPolynomial poly = beta_poly(n);
    const IntPolynomial minimal = strip_cyclotomic(poly);
    const bool divides_ok = divides(minimal, poly) && minimal.sign_at(mpq_class(1)) * minimal.sign_at(mpq_class(2)) < 0;
    r.rows.push_back({cell(n), cell(dword), cell(poly.pretty()), cell(divides_ok ? minimal.pretty() : ""),
                      {fixed(b, kDisplayPlaces), Json(b.to_double())}, cell(below_KL(n) ? "yes" : "no")});
  }
  return r;
}

Result cmd_beta_n(std::size_t k, double eps, int places) {
  const BetaValue b = beta_n(k, eps);
  const RationalInterval iv = b.algebraic().interval();
  Result r;
  r.columns = {"k", "defining_poly", "beta_n", "lo", "hi"};
  r.rows.push_back({cell(k), cell(beta_poly(k).pretty()), {fixed(b, places), Json(b.to_double())},
                    cell(format_rational(iv.lo)), cell(format_rational(iv.hi))});
  return r;
}

Result cmd_a_k(std::size_t k, const std::string& method) {
  Result r;
  if (method == "both") {
    const PeriodicSeq a = a_k_recursive(k);
    const PeriodicSeq b = a_k_explicit(k);
    r.columns = {"k", "recursive", "explicit", "agree"};
    r.rows.push_back({cell(k), cell(a.str()), cell(b.str()), cell(a == b)});
  } else {
    r.columns = {"k", "method", "a_k"};
    const PeriodicSeq a = method == "explicit" ? a_k_explicit(k) : a_k_recursive(k);
    r.rows.push_back({cell(k), cell(method), cell(a.str())});
  }
  return r;
}

Result cmd_expand(const std::string& beta, const std::string& x, std::size_t digits) {
  const GreedyExpansion e(parse_beta(beta), parse_rational(x), std::max<std::size_t>(digits, kDefaultDigitBudget));
  const BinaryWord w = e.prefix(digits);
  Result r;
  r.columns = {"beta", "x", "digits", "flag"};
  r.rows.push_back({cell(e.beta().str()), cell(x), cell(w.str()), cell(flag_text(e.finite_flag()))});
  return r;
}

Result cmd_check_unique(const std::string& beta, const std::string& seq) {
  const BetaValue b = parse_beta(beta);
  const PeriodicSeq s = PeriodicSeq::parse(seq);
  Result r;
  r.columns = {"beta", "seq", "unique"};
  r.rows.push_back({cell(b.str()), cell(s.str()), cell(is_unique_expansion(b, s))});
  return r;
}

Result cmd_verify_order(std::size_t N) {
  const OrderingReport rep = verify_ordering(N);
  Result r;
  r.columns = {"n", "beta_lo", "beta_hi", "witness_sequence", "chain_position"};
  Json chain = Json::array();
  for (const auto& e : rep.chain) {
    r.rows.push_back({cell(e.n), number(e.lo.get_d()), number(e.hi.get_d()), cell(e.witness.str()),
                      cell(e.chain_position)});
    chain.push_back({{"n", e.n},
                     {"beta_lo", e.lo.get_d()},
                     {"beta_hi", e.hi.get_d()},
                     {"witness_sequence", e.witness.str()},
                     {"chain_position", e.chain_position}});
  }
  Json violations = Json::array();
  for (const auto& v : rep.violations) {
    violations.push_back({{"k", v.k}, {"m", v.m}, {"numeric", to_string(v.numeric)}, {"expected", to_string(v.expected)}});
  }
  r.json = Json{{"max_n", rep.max_n}, {"violations", violations}, {"chain", chain}};
  return r;
}

Result cmd_min_beta(std::size_t n, double eps) {
  const MinBetaResult m = min_beta_for_period(n, eps);
  Result r;
  r.columns = {"n", "beta_lo", "beta_hi", "witness_sequence", "chain_position"};
  r.rows.push_back({cell(n), number(m.lo.get_d()), number(m.hi.get_d()), cell(m.witness.str()), {"", Json()}});
  Json anomalies = Json::array();
  for (const auto& a : m.anomalies) anomalies.push_back(a);
  r.json = Json{{"n", n},
                {"beta_lo", m.lo.get_d()},
                {"beta_hi", m.hi.get_d()},
                {"witness_sequence", m.witness.str()},
                {"chain_position", nullptr},
                {"retries", m.retries},
                {"anomalies", anomalies}};
  return r;
}

Result cmd_orbit(const std::string& beta, const std::string& x0, std::size_t steps, const std::string& map) {
  const BetaValue b = parse_beta(beta);
  double x = parse_rational(x0).get_d();
  Result r;
  r.columns = {"step", "x", "symbol"};
  if (map == "T") {
    const TrapezoidParams p(b);
    const Itinerary it = itinerary(p, x, steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
      r.rows.push_back({cell(i), number(x), cell(std::string(1, to_char(it[i])))});
      if (i < steps) x = T_beta(p, x);
    }
  } else {
    const double bd = b.to_double();
    for (std::size_t i = 0; i <= steps; ++i) {
      const char* sym = x < 1.0 / bd ? "0" : (x > 1.0 / (bd * (bd - 1.0)) ? "1" : "gap");
      r.rows.push_back({cell(i), number(x), cell(sym)});
      if (i < steps) x = F_beta(b, x);
    }
  }
  return r;
}

Result cmd_lr_cycles(const std::string& beta, std::size_t n) {
  Result r;
  r.columns = {"itinerary", "points"};
  for (const auto& c : find_lr_cycle_orbits(TrapezoidParams(parse_beta(beta)), n)) {
    std::ostringstream os;
    Json pts = Json::array();
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      os << (i ? " " : "") << std::setprecision(12) << c.points[i];
      pts.push_back(c.points[i]);
    }
    r.rows.push_back({cell(c.itinerary.str()), {os.str(), pts}});
  }
  if (r.rows.empty()) r.json = Json::array();
  return r;
}

Result cmd_extension3(const std::string& beta) {
  const ThreeCycle c = extension_3cycle(parse_beta(beta));
  Result r;
  r.columns = {"x_star", "x1", "x2", "residual", "S_x_star"};
  r.rows.push_back({number(c.x, 15), number(c.lo, 15), number(c.hi, 15), number(c.residual, 3), number(c.s_of_x, 15)});
  return r;
}

Result cmd_kl(double eps, int places) {
  const RationalInterval iv = beta_KL_bracket(mpq_class(eps));
  Result r;
  r.columns = {"beta_KL", "lo", "hi"};
  r.rows.push_back({{fixed(iv.midpoint(), places), Json(iv.midpoint().get_d())}, cell(format_rational(iv.lo)),
                    cell(format_rational(iv.hi))});
  return r;
}

Result cmd_qn(std::size_t n, double eps, int places) {
  const BetaValue q = q_n(n, eps);
  Result r;
  r.columns = {"n", "q_n", "quasi_greedy"};
  r.rows.push_back({cell(n), {fixed(q, places), Json(q.to_double())}, cell(quasi_greedy(q).str())});
  return r;
}

Result cmd_experiment(const std::string& from, const std::string& to, std::size_t steps, unsigned max_exp) {
  const mpq_class a = parse_rational(from);
  const mpq_class b = parse_rational(to);
  if (steps < 2) throw PreconditionViolated("experiment needs at least 2 steps");
  Result r;
  r.columns = {"beta", "period", "lr_cycle", "c_cycle"};
  for (std::size_t i = 0; i < steps; ++i) {
    const mpq_class beta = a + (b - a) * mpq_class(static_cast<long>(i), static_cast<long>(steps - 1));
    const TrapezoidParams p(BetaValue::from_rational(beta));
    for (const auto& row : scan_power_of_two_cycles(p, max_exp)) {
      r.rows.push_back({{fixed(beta, 6), Json(beta.get_d())}, cell(row.period), cell(row.lr_cycle), cell(row.c_cycle)});
    }
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unique beta-expansions, their period thresholds and the trapezoidal maps", "univoque"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  int places = kDisplayPlaces;
  app.add_option("--places", places, "Decimals shown for computed bases")->check(CLI::Range(0, 60));

  double eps = 0;
  auto add_eps = [&](CLI::App* sub) {
    sub->add_option("--eps", eps, "Enclosure width (default 1e-8, or $" + std::string(kEpsEnv) + ")")
        ->check(CLI::PositiveNumber);
  };

  std::size_t n_max = 8;
  auto* table = app.add_subcommand("table", "Thresholds beta_n for n = 2..n_max");
  table->add_option("n_max", n_max, "Largest n")->check(CLI::Range(2, 30));

  std::size_t k = 0;
  auto* bn = app.add_subcommand("beta-n", "Root of the defining polynomial of beta_k");
  bn->add_option("k", k)->required()->check(CLI::Range(2, 4096));
  add_eps(bn);

  std::string method = "recursive";
  auto* ak = app.add_subcommand("a-k", "Least periodic sequence of Gamma with period k");
  ak->add_option("k", k)->required()->check(CLI::Range(1, 1 << 20));
  ak->add_option("--method", method)->check(CLI::IsMember({"recursive", "explicit", "both"}));

  std::string beta, x = "1", seq, map = "F";
  std::size_t digits = 32, steps = 10, n = 0;
  auto* ex = app.add_subcommand("expand", "Greedy digits of x in base beta");
  ex->add_option("--beta", beta)->required();
  ex->add_option("--x", x);
  ex->add_option("--digits", digits)->check(CLI::Range(1, 100000));

  auto* cu = app.add_subcommand("check-unique", "Is the periodic sequence a unique expansion");
  cu->add_option("--beta", beta)->required();
  cu->add_option("--seq", seq)->required();

  std::size_t N = 8;
  auto* vo = app.add_subcommand("verify-order", "Compare beta_k for 2 <= k <= N with the Sharkovskii order");
  vo->add_option("N", N)->required()->check(CLI::Range(2, 30));

  auto* mb = app.add_subcommand("min-beta", "Recover beta_n by bisection over beta on exhaustive search");
  mb->add_option("n", n)->required()->check(CLI::Range(2, 16));
  add_eps(mb);

  auto* ob = app.add_subcommand("orbit", "Iterate F_beta or T_beta");
  ob->add_option("--beta", beta)->required();
  ob->add_option("--x", x)->required();
  ob->add_option("--steps", steps)->check(CLI::Range(0, 100000));
  ob->add_option("--map", map)->check(CLI::IsMember({"F", "T"}));

  auto* lr = app.add_subcommand("lr-cycles", "Cycles of T_beta avoiding the plateau");
  lr->add_option("--beta", beta)->required();
  lr->add_option("--n", n)->required()->check(CLI::Range(1, 24));

  auto* e3 = app.add_subcommand("extension3", "3-periodic point of the continuous extension S_beta");
  e3->add_option("--beta", beta)->required();

  auto* kl = app.add_subcommand("kl", "Komornik-Loreti constant");
  add_eps(kl);

  auto* qn = app.add_subcommand("qn", "Root of x^n = x^(n-1) + 1");
  qn->add_option("n", n)->required()->check(CLI::Range(2, 4096));
  add_eps(qn);

  std::string from = "1.55", to = "1.8";
  std::size_t samples = 26;
  unsigned max_exp = 3;
  auto* xp = app.add_subcommand("experiment-2n", "Scan beta for 2^n-cycles of T_beta and whether they meet C");
  xp->add_option("--from", from);
  xp->add_option("--to", to);
  xp->add_option("--steps", samples)->check(CLI::Range(2, 100000));
  xp->add_option("--max-exp", max_exp)->check(CLI::Range(1, 4));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (eps == 0) eps = default_eps();
    Result r;
    if (*table) r = cmd_table(n_max);
    else if (*bn) r = cmd_beta_n(k, eps, places);
    else if (*ak) r = cmd_a_k(k, method);
    else if (*ex) r = cmd_expand(beta, x, digits);
    else if (*cu) r = cmd_check_unique(beta, seq);
    else if (*vo) r = cmd_verify_order(N);
    else if (*mb) r = cmd_min_beta(n, eps);
    else if (*ob) r = cmd_orbit(beta, x, steps, map);
    else if (*lr) r = cmd_lr_cycles(beta, n);
    else if (*e3) r = cmd_extension3(beta);
    else if (*kl) r = cmd_kl(eps, places);
    else if (*qn) r = cmd_qn(n, eps, places);
    else if (*xp) r = cmd_experiment(from, to, samples, max_exp);
    emit(r, format, out);
    return 0;
  } catch (const Undecided& e) {
    err << "undecided: " << e.what() << " (budget " << e.budget() << ")\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace univoque::cli
