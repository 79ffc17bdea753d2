#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rambin/poisson.hpp"

using namespace rambin;

namespace {

// 25-digit reference decimals from an independent mpmath evaluation.
void check_near(const IntervalValue& v, const char* decimal) {
  const Rational ref = parse_rational(decimal);
  const Rational slack = make_rational(BigInt(1), ipow(10, 22));
  CHECK(v.lo - slack <= ref);
  CHECK(ref <= v.hi + slack);
  CHECK(v.width() < slack);
}

}  // namespace

TEST_CASE("rational factors") {
  CHECK(poisson_tail_factor(1) == 1);
  CHECK(poisson_tail_factor(3) == make_rational(17, 2));
  CHECK(poisson_pmf_factor(3) == make_rational(9, 2));
  CHECK(truncated_moment_factor(2, 1, MomentKind::H1) == 4);
  CHECK(truncated_moment_factor(2, 1, MomentKind::H2) == 2);
  CHECK_THROWS_AS(poisson_tail_factor(0), DomainError);
}

TEST_CASE("y, alpha and beta") {
  const PoissonSummary s1 = poisson_summary(1);
  check_near(s1.y, "0.3591409142295226176801437");
  check_near(s1.alpha, "0.1480979076967537200623044");
  check_near(s1.beta, "-0.1407483955646286476512961");
  const PoissonSummary s2 = poisson_summary(2);
  check_near(s2.y, "0.3472640247326625568076069");
  check_near(s2.alpha, "0.126931735136730220682515");
  check_near(s2.beta, "-0.2134629982105468548301332");
  const PoissonSummary s10 = poisson_summary(10);
  check_near(s10.y, "0.3362662738097306448368415");
  check_near(s10.alpha, "0.1023630953551764339416201");
  check_near(s10.beta, "-0.3050598518180734295617088");
  const PoissonSummary s300 = poisson_summary(300, PrecisionPolicy(40, 2, 2));
  check_near(s300.y, "0.333432067341739055542449");
  check_near(s300.alpha, "0.09547984595367181798724358");
  check_near(s300.beta, "-0.332358372180417823388997");
}

TEST_CASE("beta bound is attained at b = 1") {
  check_near(beta_upper_bound(), "-0.1407483955646286476512961");
  CHECK(beta_bound_attained_at_one());
}

TEST_CASE("factorial moments") {
  for (long b = 1; b <= 40; ++b) {
    for (long s = 1; s <= b; ++s) CHECK(factorial_moment_identity(b, s));
  }
  CHECK_THROWS_AS(factorial_moment_identity(3, 4), DomainError);
}

TEST_CASE("alternating falling-factorial sums") {
  for (long k = 2; k <= 30; ++k) {
    for (long s = 1; s < k; ++s) CHECK(falling_factorial_sum(k, s) == 0);
    BigInt expect = factorial(static_cast<unsigned long>(k));
    if (k % 2) expect = -expect;
    CHECK(falling_factorial_sum(k, k) == expect);
  }
  CHECK(falling_factorial_sum(2, 3) == 0);
}

TEST_CASE("expansion residuals stay under their constants") {
  for (long b : {50L, 120L, 300L}) {
    CHECK(tail_expansion_residual(b).verdict == Verdict::Holds);
    for (const auto& r : moment_expansion_residuals(b)) {
      INFO(r.claim_id << " b=" << b);
      CHECK(r.verdict == Verdict::Holds);
    }
  }
}

TEST_CASE("suite is conclusive") {
  const PoissonSuite suite = poisson_suite(40, {}, 2);
  CHECK(suite.summaries.size() == 40);
  CHECK(suite.count(Verdict::Fails) == 0);
  CHECK(suite.count(Verdict::Inconclusive) == 0);
  CHECK(suite.count(Verdict::Holds) == static_cast<long>(suite.checks.size()));
}
