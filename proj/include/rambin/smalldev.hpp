#ifndef RAMBIN_SMALLDEV_HPP
#define RAMBIN_SMALLDEV_HPP

#include "rambin/certificates.hpp"
#include "rambin/numeric.hpp"
#include "rambin/report.hpp"

#include <vector>

namespace rambin {

// Mean-one law on {alpha, beta}: P(beta) = (1 - alpha)/(beta - alpha).
struct TwoPointDist {
  Rational alpha;
  Rational beta;

  TwoPointDist(Rational alpha_, Rational beta_);  // needs 0 <= alpha < 1 < beta
  [[nodiscard]] Rational p_high() const;
};

struct SmallDevSpec {
  Rational c;
  long b;
  long n;

  SmallDevSpec(Rational c_, long b_, long n_);  // c > 0, 1 <= b <= n, b < n + c
};

// P(Bin(n, b/(n+c)) < b), exact.
Rational tilde_p(const SmallDevSpec& spec);
inline Rational tilde_p(long b, long n) { return tilde_p(SmallDevSpec(Rational(1), b, n)); }

// tilde_p(1, n) <= tilde_p(b, n) for 2 <= b, 2b <= n <= n_max.
InequalityCertificate verify_samuels(long n_max, int workers = 1);

struct TwoPointTail {
  long b;      // ceil((n + 1 - n alpha)/(beta - alpha)); b > n means the event is certain
  Rational p;  // P(xi_1 + ... + xi_n < n + 1)
};
TwoPointTail two_point_tail(const TwoPointDist& dist, long n);

// Independent oracle: walks all 2^n outcomes (n <= 20) grouped by popcount and
// tests the sum directly against n + 1.
Rational two_point_tail_bruteforce(const TwoPointDist& dist, long n);

struct EqualityWitness {
  Rational alpha;
  Rational beta;
  long b;
  Rational p;
};

struct ConjectureScan {
  long n = 0;
  Rational step;
  long points = 0;
  std::vector<ViolationReport> violations;  // P < tilde_p(b, n)
  std::vector<EqualityWitness> equalities;  // P == tilde_p(b, n)
  std::vector<ViolationReport> reduction_failures;  // (1-alpha)/(beta-alpha) > b/(n+1)
  long oracle_checked = 0;                          // n <= 20 only
  std::vector<ViolationReport> oracle_mismatches;   // two_point_tail != brute force
  Rational minimum;             // over the grid
  Rational minimum_alpha, minimum_beta;
};

// Grid alpha in {0, step, ...} below 1 and beta in {1 + step, ...} up to
// beta_max (default n + 2). b is the one from two_point_tail. For n <= 20
// every grid tail is also compared with the brute-force oracle.
ConjectureScan conjecture_scan(long n, const Rational& step, int workers = 1, Rational beta_max = 0);

// Equality family: alpha = 0 and (n+1)/beta is an integer.
bool on_equality_family(const Rational& alpha, const Rational& beta, long n);

struct MonotonicityRow {
  long b;
  long n;
  Sign sign;  // of tilde_p(b+1, n) - tilde_p(b, n)
};

struct MonotonicityScan {
  std::vector<MonotonicityRow> rows;
  std::vector<ViolationReport> decreases;
};

// Sign map for 1 <= b < n <= n_max (n_max <= 400); no pass/fail.
MonotonicityScan tilde_p_monotonicity_scan(const Rational& c, long n_max, int workers = 1);

}  // namespace rambin

#endif
