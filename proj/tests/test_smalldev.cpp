#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rambin/smalldev.hpp"

using namespace rambin;

TEST_CASE("tilde p values") {
  CHECK(tilde_p(1, 4) == make_rational(256, 625));
  CHECK(tilde_p(2, 4) == make_rational(297, 625));
  CHECK(tilde_p(3, 4) == make_rational(328, 625));
  CHECK(tilde_p(3, 6) == make_rational(57088, 117649));
  CHECK(tilde_p(SmallDevSpec(make_rational(1, 2), 2, 5)) == make_rational(64827, 161051));
  CHECK_THROWS_AS(SmallDevSpec(0, 1, 4), DomainError);
  CHECK_THROWS_AS(SmallDevSpec(make_rational(1, 2), 5, 4), DomainError);
}

TEST_CASE("two-point tail") {
  const TwoPointDist d(make_rational(1, 2), 2);
  CHECK(d.p_high() == make_rational(1, 3));
  const TwoPointTail t = two_point_tail(d, 4);
  CHECK(t.b == 2);
  CHECK(t.p == make_rational(16, 27));
  CHECK(two_point_tail_bruteforce(d, 4) == t.p);
  // n + 1 unreachable: certain event
  const TwoPointTail certain = two_point_tail(TwoPointDist(0, make_rational(11, 10)), 4);
  CHECK(certain.b == 5);
  CHECK(certain.p == 1);
  CHECK_THROWS_AS(TwoPointDist(1, 2), DomainError);
  CHECK_THROWS_AS(two_point_tail_bruteforce(d, 21), ResourceError);
}

TEST_CASE("equality on alpha = 0 with integer (n+1)/beta") {
  const TwoPointDist d(0, make_rational(5, 3));
  const TwoPointTail t = two_point_tail(d, 4);
  CHECK(t.b == 3);
  CHECK(t.p == make_rational(328, 625));
  CHECK(t.p == tilde_p(3, 4));
  CHECK(on_equality_family(0, make_rational(5, 3), 4));
  CHECK_FALSE(on_equality_family(0, make_rational(7, 4), 4));
  CHECK_FALSE(on_equality_family(make_rational(1, 10), make_rational(5, 3), 4));
}

TEST_CASE("samuels floor") {
  const auto cert = verify_samuels(60, 2);
  CHECK(cert.status == CertStatus::Verified);
  CHECK(cert.points_checked > 0);
}

TEST_CASE("conjecture scan") {
  for (long n = 1; n <= 8; ++n) {
    const ConjectureScan s = conjecture_scan(n, make_rational(1, 20), 2);
    INFO("n=" << n);
    CHECK(s.violations.empty());
    CHECK(s.reduction_failures.empty());
    CHECK(s.oracle_mismatches.empty());
    CHECK(s.oracle_checked == s.points);
    for (const auto& e : s.equalities) CHECK(on_equality_family(e.alpha, e.beta, n));
    // minimum (n/(n+1))^n at alpha = 0, beta = n + 1
    CHECK(s.minimum == rpow(make_rational(n, n + 1), static_cast<unsigned long>(n)));
    CHECK(s.minimum_alpha == 0);
    CHECK(s.minimum_beta == n + 1);
  }
  CHECK_THROWS_AS(conjecture_scan(61, make_rational(1, 20)), ResourceError);
  CHECK_THROWS_AS(conjecture_scan(4, make_rational(1, 5)), DomainError);
}

TEST_CASE("monotonicity sign map") {
  const MonotonicityScan m = tilde_p_monotonicity_scan(1, 60, 2);
  CHECK(m.rows.size() == 59 * 60 / 2);
  CHECK(m.decreases.empty());
  CHECK_THROWS_AS(tilde_p_monotonicity_scan(1, 401), ResourceError);
}
