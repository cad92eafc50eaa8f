#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "univoque/beta.hpp"
#include "univoque/polynomial.hpp"
#include "univoque/thresholds.hpp"
#include "univoque/words.hpp"

using namespace univoque;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("table as CSV") {
  const Run r = run({"table", "8", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == "n,d_beta_n,defining_poly,minimal_poly_if_divides,beta_n,below_KL");
  CHECK(rows[1] == "2,11,x^2-x-1,x^2-x-1,1.61803,yes");
  CHECK(rows[3] == "4,1101,x^4-x^3-x^2-1,x^3-2x^2+x-1,1.75488,yes");
  CHECK(rows[7] == "8,11010011,x^8-x^7-x^6-x^4-x-1,x^5-2x^4+x^2-1,1.78460,yes");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(split(rows[i], ',').size() == 6);
}

TEST_CASE("table as JSON") {
  const Run r = run({"table", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  CHECK(j[0]["n"] == 2);
  CHECK(j[1]["d_beta_n"] == "111");
  CHECK(j[2]["below_KL"] == "yes");
}

TEST_CASE("single commands") {
  const Run b = run({"beta-n", "5", "--format", "json"});
  REQUIRE(b.code == 0);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j["k"] == 5);
  CHECK(std::abs(j["beta_n"].get<double>() - 1.81240) < 1e-5);

  const Run u = run({"check-unique", "--beta", "1.7", "--seq", "(0011)^w", "--format", "json"});
  REQUIRE(u.code == 0);
  CHECK(nlohmann::json::parse(u.out)["unique"] == false);
  const Run v = run({"check-unique", "--beta", "float:1.8", "--seq", "(0011)^w", "--format", "json"});
  CHECK(nlohmann::json::parse(v.out)["unique"] == true);

  const Run kl = run({"kl", "--format", "json"});
  REQUIRE(kl.code == 0);
  CHECK(kl.out.find("1.78723") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"expand", "--beta", "1.5", "--x", "0.6666666666667", "--digits", "5"}).code == 2);
  CHECK(run({"check-unique", "--beta", "1.9", "--seq", "(1)^w"}).code == 0);
  CHECK(run({"expand", "--beta", "0.5", "--x", "0.5", "--digits", "5"}).code == 1);
  CHECK(run({"check-unique", "--beta", "1.9", "--seq", "(12)^w"}).code == 1);
  CHECK(run({"beta-n", "notanumber"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  const Run bad = run({"expand", "--beta", "1.5", "--x", "0.6666666666667", "--digits", "5"});
  CHECK(bad.err.find("undecided") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify-order", "10", "--format", "json"};
  const Run a = run(args);
  const Run b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("printed values parse back") {
  const Run o = run({"verify-order", "8", "--format", "json"});
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["max_n"] == 8);
  CHECK(j["violations"].empty());
  for (const auto& e : j["chain"]) {
    const PeriodicSeq w = PeriodicSeq::parse(e["witness_sequence"].get<std::string>());
    CHECK(w == a_k_recursive(e["n"].get<std::size_t>()));
    CHECK(e["beta_lo"].get<double>() <= e["beta_hi"].get<double>());
  }
  const Run u = run({"check-unique", "--beta", "1.7", "--seq", "(0011)^w", "--format", "json"});
  const auto ju = nlohmann::json::parse(u.out);
  CHECK(BetaValue::parse(ju["beta"].get<std::string>()).compare(BetaValue::from_double(1.7)) == Ordering::Equal);
  CHECK(PeriodicSeq::parse(ju["seq"].get<std::string>()) == PeriodicSeq::parse("(0011)^w"));
  const auto rows = lines(run({"table", "4", "--format", "csv"}).out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i], ',');
    CHECK(parse_rational(cells[4]) > 1);
  }
}

TEST_CASE("UNIVOQUE_EPS sets the default precision") {
  ::setenv("UNIVOQUE_EPS", "1e-3", 1);
  const Run coarse = run({"beta-n", "5", "--format", "json"});
  ::unsetenv("UNIVOQUE_EPS");
  const Run fine = run({"beta-n", "5", "--format", "json"});
  REQUIRE(coarse.code == 0);
  REQUIRE(fine.code == 0);
  const auto jc = nlohmann::json::parse(coarse.out);
  const auto jf = nlohmann::json::parse(fine.out);
  const mpq_class wc = parse_rational(jc["hi"].get<std::string>()) - parse_rational(jc["lo"].get<std::string>());
  const mpq_class wf = parse_rational(jf["hi"].get<std::string>()) - parse_rational(jf["lo"].get<std::string>());
  CHECK(wc < parse_rational("1e-3"));
  CHECK(wc > parse_rational("1e-8"));
  CHECK(wf < parse_rational("1e-8"));
}
