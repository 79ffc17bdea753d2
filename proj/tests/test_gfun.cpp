#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rambin/gfun.hpp"

using namespace rambin;

TEST_CASE("kernel values") {
  CHECK(eval_g(BinomialSpec(1, 2), make_rational(1, 2)) == make_rational(1, 2));
  CHECK(eval_g(BinomialSpec(2, 4), make_rational(1, 2)) == make_rational(1, 8));
  CHECK(eval_g(BinomialSpec(3, 8), make_rational(1, 4)) == make_rational(9, 16384));
  const DeltaInterval d = delta_interval(BinomialSpec(3, 10));
  CHECK(d.lo == make_rational(3, 5));
  CHECK(d.hi == make_rational(7, 10));
}

TEST_CASE("closed-form derivatives") {
  const BinomialSpec s(2, 4);
  CHECK(derivative_closed_form(s, 1, make_rational(1, 2)) == make_rational(1, 4));
  CHECK(derivative_closed_form(s, 1, make_rational(2, 3)) == 0);
  CHECK_THROWS_AS(derivative_closed_form(s, 3, make_rational(1, 2)), DomainError);
  CHECK(derivative_oracle(s, 1) == IntegerPolynomial({0, 2, -3}));
  CHECK(derivative_oracle(s, 4).is_zero());
  CHECK(derivative_oracle(BinomialSpec(3, 5), 2).degree() == 2);
  CHECK_THROWS_AS(derivative_oracle(BinomialSpec(3, 61), 1), ResourceError);
  // d^4/dz^4 of (1-z)^5 z^14 at 7/10
  CHECK(fourth_derivative(BinomialSpec(6, 20), make_rational(7, 10)) ==
        parse_rational("4039678535949/31250000000000"));
}

TEST_CASE("closed form equals the oracle") {
  for (long n = 2; n <= 30; ++n) {
    for (long b = 1; b < n; ++b) CHECK(verify_claim2(BinomialSpec(b, n)));
  }
}

TEST_CASE("integrals over Delta") {
  CHECK(integrate_g_delta(BinomialSpec(1, 2)) == make_rational(1, 8));
  CHECK(integrate_g_delta(BinomialSpec(1, 3)) == make_rational(7, 81));
  CHECK(integrate_g_delta(BinomialSpec(2, 4)) == make_rational(67, 3072));
  CHECK(integrate_g_delta(BinomialSpec(5, 12)) == parse_rational("293901563287/5884626295848960"));
  CHECK(integrate_g_delta(BinomialSpec(6, 20)) ==
        parse_rational("59760123331317485457361/81285611520000000000000000000"));
  CHECK_THROWS_AS(integrate_g_delta(BinomialSpec(4, 4)), DomainError);
}

TEST_CASE("integral identities") {
  for (long n = 2; n <= 30; ++n) {
    for (long b = 1; b < n; ++b) {
      const Claim1Result r = verify_claim1_detail(BinomialSpec(b, n));
      CHECK(r.all());
    }
  }
}

TEST_CASE("certificate polynomials") {
  CHECK(eval_P(1, 1) == 192);
  CHECK(eval_P(6, 20) == 11028);
  CHECK(eval_P(39, 158) == 1240952256);
  CHECK(eval_P(10, 25) == -497886);
  CHECK(eval_R(BigInt(6), BigInt(20)) == 31044);
  const PSplit sp = split_P(BigInt(6), BigInt(20));
  CHECK(sp.leading + sp.remainder == eval_P(6, 20));
}

TEST_CASE("Q identity and lower bound") {
  for (long n = 12; n <= 40; ++n) {
    for (long b = 5; 2 * b <= n; ++b) {
      const BinomialSpec s(b, n);
      const Rational x = make_rational(b + 1, n);
      const Rational lhs = fourth_derivative(s, 1 - x);
      const Rational rhs = rpow(x, static_cast<unsigned long>(b - 5)) *
                           rpow(1 - x, static_cast<unsigned long>(n - b - 4)) * eval_Q(s);
      CHECK(lhs == rhs);
      CHECK(q_lower_bound(s) <= eval_Q(s));
    }
  }
}

TEST_CASE("Taylor sandwich") {
  const TaylorSandwich t = taylor_sandwich(BinomialSpec(5, 10));
  CHECK(t.lower(t.delta.lo) == eval_g(BinomialSpec(5, 10), t.delta.lo));
  CHECK(t.upper(t.delta.lo) == t.lower(t.delta.lo));
  CHECK(verify_claim3(BinomialSpec(5, 10)).empty());
  CHECK(taylor_sandwich(BinomialSpec(6, 20)).d4_minus <= taylor_sandwich(BinomialSpec(6, 20)).d4_plus);
  const auto grid = sandwich_grid(BinomialSpec(5, 10));
  REQUIRE(grid.size() == 5);
  CHECK(grid[1] == t.delta.lo + make_rational(1, 40));
  CHECK(grid[3] == t.delta.hi - make_rational(1, 40));
  CHECK_THROWS_AS(taylor_sandwich(BinomialSpec(4, 10)), DomainError);
}

TEST_CASE("sandwich lower bound breaks for b = 5 from n = 56") {
  // The fourth derivative dips right after the left end of Delta once n >= 56,
  // so the lower bound fails at the first interior grid point.
  CHECK(verify_claim3(BinomialSpec(5, 55)).empty());
  const auto bad = verify_claim3(BinomialSpec(5, 56));
  REQUIRE(bad.size() == 1);
  CHECK(bad.front().claim_id == "claim3-lower");
  CHECK(verify_claim3(BinomialSpec(6, 120)).empty());
}
