#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rambin/interval.hpp"
#include "rambin/numeric.hpp"
#include "rambin/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace rambin;

TEST_CASE("make_rational canonicalizes") {
  const Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("integer helpers") {
  CHECK(ipow(3, 4) == 81);
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(10) == 3628800);
  CHECK(rpow(make_rational(2, 3), 3) == make_rational(8, 27));
  CHECK(floor_of(make_rational(-7, 2)) == -4);
  CHECK(ceil_of(make_rational(7, 2)) == 4);
  CHECK(ceil_of(Rational(5)) == 5);
}

TEST_CASE("rational text round trip") {
  const Rational q = make_rational(-22, 7);
  CHECK(fraction_string(q) == "-22/7");
  CHECK(parse_rational("-22/7") == q);
  CHECK(parse_rational("3") == 3);
  CHECK(decimal_string(make_rational(1, 3), 5) == "0.33333");
  CHECK_THROWS(parse_rational("x/2"));
}

TEST_CASE("interval arithmetic is outward") {
  const IntervalValue a(make_rational(1, 3), make_rational(1, 2));
  const IntervalValue b = IntervalValue::point(2);
  const IntervalValue s = a * b + a;
  CHECK(s.lo == 1);
  CHECK(s.hi == make_rational(3, 2));
  CHECK(certainly_less(a, b));
  CHECK_THROWS_AS(b / IntervalValue(-1, 1), PrecisionError);
  const Rational third = make_rational(1, 3);
  CHECK(round_down(third, 20) <= third);
  CHECK(round_up(third, 20) >= third);
}

TEST_CASE("transcendental enclosures") {
  // e = 2.718281828459045235360287...
  const IntervalValue e = exp_pos_enclosure(1, series_terms_for_bits(200), 200);
  // decimal truncations of e just below and just above
  CHECK(e.lo > parse_rational("2.71828182845904523536028747135266249775"));
  CHECK(e.hi < parse_rational("2.71828182845904523536028747135266249776"));
  CHECK(e.width() < parse_rational("1/1000000000000000000000000000000000000000"));
  const IntervalValue inv = exp_neg_enclosure(1, series_terms_for_bits(100), 100);
  CHECK((inv * e).contains(Rational(1)));
  const IntervalValue pi = pi_enclosure();
  CHECK(pi.lo > make_rational(314159265358979, 100000000000000));
  CHECK(pi.hi < make_rational(314159265358980, 100000000000000));
  const IntervalValue r = sqrt(IntervalValue::point(2), 80);
  CHECK((r * r).contains(Rational(2)));
}

TEST_CASE("report csv and json round trip") {
  Report r;
  r.meta["command"] = "demo";
  r.columns = {"claim_id", "b", "n"};
  r.add_row({"thm3", "1", "5"});
  r.add_row({"with,comma", "2", "7"});
  r.violations.push_back(ViolationReport::make("x", 2, 7, make_rational(1, 3), make_rational(1, 2)));
  const Report back = Report::from_csv(r.to_csv());
  CHECK(back.columns == r.columns);
  CHECK(back.rows == r.rows);
  const Report j = Report::from_json(r.to_json());
  CHECK(j.rows == r.rows);
  CHECK(j.violations == r.violations);
  CHECK(Report::violations_from_csv(r.violations_to_csv()) == r.violations);
  CHECK(r.violations.front().lhs_raw == "1/3");
  CHECK_THROWS(r.add_row({"short"}));
}

TEST_CASE("report ordering and atomic write") {
  auto a = ViolationReport::make("a", 3, 10, 0, 0);
  auto b = ViolationReport::make("a", 1, 11, 0, 0);
  CHECK(report_order(a, b));
  const std::string path = "test_numeric_atomic.txt";
  write_atomically(path, "hello\n");
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(s.str() == "hello\n");
  std::remove(path.c_str());
}

TEST_CASE("precision policy escalation") {
  const PrecisionPolicy p;
  CHECK(p.escalated(1).digits == 2 * p.digits);
  CHECK(p.bits() > static_cast<unsigned long>(3 * p.digits));
}
