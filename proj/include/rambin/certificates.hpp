#ifndef RAMBIN_CERTIFICATES_HPP
#define RAMBIN_CERTIFICATES_HPP

#include "rambin/interval.hpp"
#include "rambin/numeric.hpp"
#include "rambin/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rambin {

enum class Band {
  SmallB,    // 3b + 2 <= n <= n_hi
  MediumB,   // (n - 1)/3 <= b <= n/2, i.e. 2b <= n <= 3b + 1
  Explicit,  // the listed points only
};

struct RangeSpec {
  long b_lo = 1;
  long b_hi = 1;
  Band band = Band::Explicit;
  long n_hi = 0;  // SmallB only
  std::vector<std::pair<long, long>> points;  // Explicit only

  static RangeSpec small_band(long b_lo, long b_hi, long n_hi);
  static RangeSpec medium_band(long b_lo, long b_hi);
  static RangeSpec explicit_points(std::vector<std::pair<long, long>> pts);

  // (b, n) pairs in (n, b) order; throws DomainError if empty or b >= n anywhere.
  [[nodiscard]] std::vector<std::pair<long, long>> enumerate() const;
  [[nodiscard]] std::string describe() const;
};

enum class CertStatus { Verified, Violated, Inconclusive };
const char* cert_status_name(CertStatus s);

struct InequalityCertificate {
  std::string claim_id;
  std::string range;
  CertStatus status = CertStatus::Inconclusive;
  long points_checked = 0;
  long inconclusive_points = 0;
  std::vector<ViolationReport> witnesses;
  std::vector<std::string> notes;

  // status = verified iff no witnesses and every point was conclusive.
  void finalize();
};

// Named intermediate evaluators.
// A_{b,n} = (n - b) ((b+1)/n)^5
Rational a_bn(long b, long n);
// U = 1 + r - (bt/(bt+1))^bt r^{n-bt}, r = (n-bt)/(n-bt-1), bt = n - b - 1
Rational u_bn(long b, long n);
// B = (1 - 1/(b+1))^b (1 + 1/(n-b-1))^{n-b-1} - 1
Rational b_bn(long b, long n);

// Direct (small_b_ineq) at each point of the range; needs 6 <= b <= (n-2)/3.
InequalityCertificate check_small_b(const RangeSpec& range, int workers = 1);
// 5(b+1)^2(n-b-1)^2 P > 3 b n^2 (b+13)(b^2+8)(b-n)^2 for all real n >= n0(b),
// certified per b by a Taylor shift to n0 with positive coefficients.
InequalityCertificate check_small_b_sufficient(long b_lo, long b_hi, int workers = 1);
// n0(b) = 3b + 2 for b >= 39, max(3b + 2, 158) below; smaller n is left to the direct check.
long small_b_sufficient_start(long b);
// R_{b,n} > 0 for 6 <= b <= (n-2)/3, n <= n_max.
InequalityCertificate check_r_positive(long n_max);

// The (negativeness) expression is < 0 at each point; needs 2b <= n <= 3b+1.
InequalityCertificate check_medium(const RangeSpec& range, int workers = 1);
// 5P < bn(3bn + 46b - 57n) on 2b <= n <= 3b+1, certified per b at both
// band endpoints (the difference is convex in n).
InequalityCertificate check_medium_polynomial(long b_lo, long b_hi);

// 9 A bt^2 + 3 bt B + C < 0 with A < 0 and 6 A bt + B <= 0 (so A n^2 + B n + C
// decreases past 3 bt), for bt_lo <= bt <= bt_hi.
InequalityCertificate check_above_half(long bt_lo, long bt_hi);
// Bracket of (above_n_over_2_b_ineq) is negative for 5 <= bt, 2 bt <= n <= n_hi.
InequalityCertificate check_above_half_direct(long n_hi, int workers = 1);
// The bracket itself.
Rational above_half_bracket(long bt, long n);

// (1 + 1/b)^b (1 - 1/(n-b))^{n-b-1} < 1 for n >= 2b + 2, n <= n_max.
InequalityCertificate check_exp_bound_first(long n_max, int workers = 1);
// (1 - 1/(b+1))^b (1 + 1/(n-b-1))^{n-b-1} < 1 for (n+1)/2 <= b <= n - 2, 6 <= n <= n_max.
InequalityCertificate check_exp_bound_second(long n_max, int workers = 1);
// Integer forms of the two comparisons at one point.
Sign exp_bound_first_sign(long b, long n);   // sign of lhs - 1
Sign exp_bound_second_sign(long b, long n);  // sign of lhs - 1

// Lower bound for z_{b+1,n} - z_{b,n}.
Rational z_lowerbound(long b, long n);
struct ZLowerboundBand {
  long b;
  long n_lo;         // scanned from 2b + 1
  long n_hi;
  long holds_from;   // smallest n with the bound holding on [n, n_hi]; 0 if never
};
// Checks b in [b_lo, b_hi], 2b + 1 <= n <= n_hi (n_hi <= 2000).
InequalityCertificate check_z_lowerbound(long b_lo, long b_hi, long n_hi, int workers = 1,
                                         std::vector<ZLowerboundBand>* bands = nullptr);

// Small-b argument (b <= 5 and b = n - 5), one certificate per part.
std::vector<InequalityCertificate> check_appendix_b(const PrecisionPolicy& policy = {});
// Left sides of (ineq_1) and (ineq_2) for b = 5 and split constant c.
IntervalValue appendix_b_ineq1(long n, const Rational& c, const PrecisionPolicy& policy = {});
IntervalValue appendix_b_ineq2(long n, const Rational& c, const PrecisionPolicy& policy = {});
// Upper bound on n^n (p_{n-4,n} - p_{n-5,n}) / (n-4)^n; coefficient k multiplies (n-4)^{-k}.
std::vector<IntervalValue> n_minus_5_bound_coefficients(const PrecisionPolicy& policy = {});
IntervalValue n_minus_5_bound(long n, const PrecisionPolicy& policy = {});

// 4(20b^2+77b-39)(28b^3-1047b^2-1280b-156) > 0 on [39, b_max] and
// 4(20b^2+77b+129)(12b^3-160b^2-1075b-129) > 0 on [19, b_max], plus the
// Taylor-shift tail argument beyond b_max.
std::vector<InequalityCertificate> check_root_bounds(long b_max = 10000);
BigInt root_bound_first(long b);
BigInt root_bound_second(long b);

}  // namespace rambin

#endif
