#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rambin/certificates.hpp"
#include "rambin/exactcore.hpp"
#include "rambin/gfun.hpp"

using namespace rambin;

TEST_CASE("range enumeration") {
  const auto small = RangeSpec::small_band(6, 7, 25).enumerate();
  // b = 6: n = 20..25, b = 7: n = 23..25
  CHECK(small.size() == 9);
  const auto medium = RangeSpec::medium_band(6, 6).enumerate();
  CHECK(medium.size() == 8);  // n = 12..19
  CHECK_THROWS_AS((void)RangeSpec::explicit_points({{5, 5}}).enumerate(), DomainError);
  CHECK_THROWS_AS((void)RangeSpec::small_band(10, 10, 20).enumerate(), DomainError);
}

TEST_CASE("named evaluators") {
  CHECK(a_bn(6, 20) == make_rational(117649, 1600000));
  CHECK(u_bn(6, 20) == parse_rational("281684818016771/269796888281088"));
  CHECK(b_bn(6, 20) == parse_rational("11887929735683/302875106592253"));
  CHECK(z_lowerbound(3, 20) ==
        parse_rational("27960164552234585081933/13727919365702058636214272"));
  CHECK(above_half_bracket(8, 20) == parse_rational("-528070043093077/1659995174464000000"));
}

TEST_CASE("lower bound sits under the true difference") {
  const Rational diff = ramanujan_z(BinomialSpec(4, 20)) - ramanujan_z(BinomialSpec(3, 20));
  CHECK(z_lowerbound(3, 20) < diff);
  std::vector<ZLowerboundBand> bands;
  const auto cert = check_z_lowerbound(1, 15, 100, 2, &bands);
  CHECK(cert.status == CertStatus::Verified);
  CHECK(bands.size() == 15);
  CHECK_THROWS_AS(check_z_lowerbound(1, 2, 3000), ResourceError);
}

TEST_CASE("small b band") {
  CHECK(check_small_b(RangeSpec::small_band(6, 12, 60), 2).status == CertStatus::Verified);
  CHECK(check_small_b_sufficient(6, 80, 2).status == CertStatus::Verified);
  CHECK(small_b_sufficient_start(39) == 119);
  CHECK(small_b_sufficient_start(20) == 158);
  CHECK(small_b_sufficient_start(60) == 182);
  CHECK(check_r_positive(120).status == CertStatus::Verified);
  CHECK(eval_R(BigInt(6), BigInt(20)) == 31044);
}

TEST_CASE("medium band") {
  CHECK(check_medium(RangeSpec::medium_band(6, 19), 2).status == CertStatus::Verified);
  CHECK(check_medium_polynomial(19, 400).status == CertStatus::Verified);
  // the polynomial form is too weak for the smallest b
  const auto weak = check_medium_polynomial(6, 10);
  CHECK(weak.status == CertStatus::Violated);
  for (const auto& w : weak.witnesses) CHECK(w.b <= 8);
}

TEST_CASE("above n/2") {
  CHECK(check_above_half(5, 400).status == CertStatus::Verified);
  CHECK(check_above_half_direct(50, 2).status == CertStatus::Verified);
}

TEST_CASE("exponential bounds") {
  CHECK(exp_bound_first_sign(3, 8) == Sign::Negative);
  CHECK(exp_bound_second_sign(5, 8) == Sign::Negative);
  CHECK(check_exp_bound_first(200, 2).status == CertStatus::Verified);
  CHECK(check_exp_bound_second(200, 2).status == CertStatus::Verified);
}

TEST_CASE("b = 5 and b = n - 5 parts") {
  const auto certs = check_appendix_b();
  REQUIRE_FALSE(certs.empty());
  for (const auto& c : certs) {
    INFO(c.claim_id);
    CHECK(c.status == CertStatus::Verified);
  }
  const auto k = n_minus_5_bound_coefficients();
  REQUIRE(k.size() >= 2);
  CHECK(k[0].hi < 0);
  CHECK(n_minus_5_bound(28).hi < 0);
}

TEST_CASE("root bounds") {
  CHECK(root_bound_first(39) > 0);
  CHECK(root_bound_first(38) < 0);
  CHECK(root_bound_second(19) > 0);
  CHECK(root_bound_second(18) < 0);
  for (const auto& c : check_root_bounds(2000)) {
    INFO(c.claim_id);
    CHECK(c.status == CertStatus::Verified);
  }
}
