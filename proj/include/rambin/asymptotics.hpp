#ifndef RAMBIN_ASYMPTOTICS_HPP
#define RAMBIN_ASYMPTOTICS_HPP

#include "rambin/exactcore.hpp"
#include "rambin/numeric.hpp"

#include <vector>

namespace rambin {

// A floating result converted to an exact rational, with a forward-error
// bound: the true value lies in [value - error, value + error].
struct HighPrecValue {
  Rational value;
  Rational error;
  int digits = 0;
  bool exact = false;  // error is 0 and value is the exact rational
};

inline constexpr long kExactCutoff = 2000;

// MPFR evaluation of z_{b,n} at policy.digits. Throws PrecisionError if the
// error bound exceeds 10^{-digits/guard_exponent}.
HighPrecValue z_highprec(const BinomialSpec& spec, const PrecisionPolicy& policy = {});

struct SignResult {
  Sign sign = Sign::Zero;
  bool conclusive = false;
  bool exact_path = false;
  int digits = 0;  // highest precision used
};

// Sign of z_{b+1,n} - z_{b,n}; exact for n <= exact_cutoff, otherwise the
// float path with escalation: two consecutive precisions must agree and
// clear both the error bound and the guard.
SignResult z_diff_sign(long b, long n, const PrecisionPolicy& policy = {},
                       long exact_cutoff = kExactCutoff);

// z_{b,n} - (1/3 + 4/(135 b) + b/(3 n)); requires n >= 10 b^2.
HighPrecValue claim5_residual(long b, long n, const PrecisionPolicy& policy = {});
// 1.2 times the largest b^{1.5} |residual| seen for b in {30, 60, 120}, n = 10 b^2.
Rational claim5_bound();

struct Claim5Check {
  long b = 0;
  long n = 0;
  HighPrecValue residual;
  Verdict verdict = Verdict::Inconclusive;
};
// b^{3/2} |residual| <= claim5_bound() at n = 10 b^2, compared as b^3 r^2 <= K^2.
Claim5Check claim5_check(long b, const PrecisionPolicy& policy = {});

struct ThresholdReport {
  long n = 0;
  long window_lo = 0;
  long window_hi = 0;
  long b_star_low = 0;   // first b in the window with a - to + flip
  long b_star_high = 0;  // n - 1 - b_star_low (the difference is symmetric)
  double predicted = 0;  // sqrt(77 n / 360)
  double ratio_low = 0;
  double ratio_high = 0;  // (n - 1 - b_star_high) / predicted
  Sign middle_sign = Sign::Zero;  // sign at b = floor(n/2) - 1
  std::vector<long> sign_changes;  // every b with sign(b) != sign(b - 1)
  std::vector<long> inconclusive;
};

// Requires n >= 10^4 unless allow_small is set.
ThresholdReport theorem2_threshold(long n, const PrecisionPolicy& policy = {}, int workers = 1,
                                   bool allow_small = false);

}  // namespace rambin

#endif
