#ifndef RAMBIN_POISSON_HPP
#define RAMBIN_POISSON_HPP

#include "rambin/interval.hpp"
#include "rambin/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

// Enclosures for eta_b ~ Poisson(b). Every quantity is an exact rational
// factor times an enclosure of e^{-b} (or e^{b}).
namespace rambin {

struct PoissonSummary {
  long b = 0;
  IntervalValue tail;      // P(eta_b < b)
  IntervalValue pmf_at_b;  // P(eta_b = b)
  IntervalValue y;
  IntervalValue alpha;
  IntervalValue beta;
};

// sum_{i<b} b^i / i!
Rational poisson_tail_factor(long b);
// b^b / b!
Rational poisson_pmf_factor(long b);

IntervalValue poisson_tail(long b, const PrecisionPolicy& policy = {});
IntervalValue y_poisson(long b, const PrecisionPolicy& policy = {});
// alpha_b from y = 1/3 + 4/(135(b + alpha)); beta_b from
// y = 1/3 + 4/(135 b) - 8/(2835 (b + beta)^2).
std::pair<IntervalValue, IntervalValue> alpha_beta(long b, const PrecisionPolicy& policy = {});
PoissonSummary poisson_summary(long b, const PrecisionPolicy& policy = {});

// -1 + 4/sqrt(21(368 - 135e)).
IntervalValue beta_upper_bound(const PrecisionPolicy& policy = {});
// The b = 1 beta expression and the bound are the same function of e:
// compares the rational coefficients exactly.
bool beta_bound_attained_at_one();

// E[eta^{(s)} I(eta < b)] = b^s P(eta < b - s), rational parts compared exactly.
bool factorial_moment_identity(long b, long s);

enum class MomentKind { H1, H2 };
// Rational part of h_k^1 = E[(b - eta)^k I(eta < b)] or
// h_k^2 = E[eta (b - eta)^k I(eta < b)].
Rational truncated_moment_factor(long b, long k, MomentKind which);
IntervalValue truncated_moment(long b, long k, MomentKind which, const PrecisionPolicy& policy = {});

// sum_{i=0}^{k} (-1)^i C(k, i) i^{(s)}
BigInt falling_factorial_sum(long k, long s);

// Scaled residuals of the large-b expansions; each is bounded by a pinned
// constant (calibrated on b = 50..300, times 1.2).
struct ResidualCheck {
  std::string claim_id;
  long b = 0;
  IntervalValue scaled_residual;
  Rational bound;
  Verdict verdict = Verdict::Inconclusive;
};
// b^{5/2} |P(eta_b < b) - (1/2 - 1/(3 sqrt(2 pi b)) - 1/(540 sqrt(2 pi) b^{3/2}))|
ResidualCheck tail_expansion_residual(long b, const PrecisionPolicy& policy = {});
// h_1^1, h_2^1, h_3^1 and h_1^2 against their leading terms.
std::vector<ResidualCheck> moment_expansion_residuals(long b, const PrecisionPolicy& policy = {});

struct PoissonCheck {
  std::string claim_id;
  long b = 0;
  Verdict verdict = Verdict::Inconclusive;
  int digits = 0;  // precision at which the verdict was reached
};

struct PoissonSuite {
  std::vector<PoissonSummary> summaries;
  std::vector<PoissonCheck> checks;
  [[nodiscard]] long count(Verdict v) const;
};

// Range, monotonicity and bound checks for b = 1..b_max; each b escalates
// its precision until all of its checks are conclusive or the policy's
// escalation budget runs out.
PoissonSuite poisson_suite(long b_max, const PrecisionPolicy& policy = {}, int workers = 1);

}  // namespace rambin

#endif
