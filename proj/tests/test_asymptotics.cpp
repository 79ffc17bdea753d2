#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rambin/asymptotics.hpp"

#include <cmath>

using namespace rambin;

TEST_CASE("high-precision z encloses the exact value") {
  for (auto [b, n] : {std::pair{2L, 8L}, std::pair{5L, 17L}, std::pair{10L, 25L}, std::pair{40L, 300L}}) {
    const BinomialSpec s(b, n);
    const HighPrecValue h = z_highprec(s);
    const Rational exact = ramanujan_z(s);
    CHECK(h.value - h.error <= exact);
    CHECK(exact <= h.value + h.error);
    CHECK(h.error < make_rational(BigInt(1), ipow(10, 20)));
  }
}

TEST_CASE("float sign path agrees with the exact one") {
  for (long n = 30; n <= 90; n += 20) {
    for (long b = 1; b < n; ++b) {
      const SignResult f = z_diff_sign(b, n, {}, 0);
      CHECK_FALSE(f.exact_path);
      CHECK(f.conclusive);
      CHECK(f.sign == z_diff_sign_exact(b, n));
    }
  }
  const SignResult e = z_diff_sign(3, 20);
  CHECK(e.exact_path);
  CHECK(e.conclusive);
}

TEST_CASE("z expansion residual") {
  const HighPrecValue r = claim5_residual(30, 9000);
  CHECK(std::fabs(to_double(r.value) + 4.86688e-6) < 1e-10);
  const double k = to_double(claim5_bound());
  CHECK(k > 9.59e-4);
  CHECK(k < 9.61e-4);
  for (long b : {30L, 60L, 120L}) CHECK(claim5_check(b).verdict == Verdict::Holds);
  CHECK_THROWS_AS(claim5_residual(30, 100), DomainError);
}

TEST_CASE("threshold structure at small n") {
  const long n = 600;
  const ThresholdReport t = theorem2_threshold(n, {}, 2, true);
  CHECK(t.b_star_high == n - 1 - t.b_star_low);
  CHECK(t.predicted == doctest::Approx(std::sqrt(77.0 * n / 360.0)));
  CHECK(t.inconclusive.empty());
  CHECK(t.middle_sign == Sign::Positive);
  CHECK(z_diff_sign_exact(t.b_star_low - 1, n) == Sign::Negative);
  CHECK(z_diff_sign_exact(t.b_star_low, n) == Sign::Positive);
  for (long b : t.sign_changes) CHECK(z_diff_sign_exact(b, n) != z_diff_sign_exact(b - 1, n));
  CHECK_THROWS_AS(theorem2_threshold(n), DomainError);
}
