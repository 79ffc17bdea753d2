#ifndef RAMBIN_GFUN_HPP
#define RAMBIN_GFUN_HPP

#include "rambin/exactcore.hpp"
#include "rambin/numeric.hpp"
#include "rambin/report.hpp"

#include <array>
#include <vector>

// The kernel g(z) = (1 - z)^{b-1} z^{n-b} on Delta_{b,n} = [1 - (b+1)/n, 1 - b/n].
namespace rambin {

// sum_k coefficients[k] z^k / scale.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coefficients, BigInt scale = 1);

  [[nodiscard]] const std::vector<BigInt>& coefficients() const { return coeffs_; }
  [[nodiscard]] const BigInt& scale() const { return scale_; }
  // -1 for the zero polynomial.
  [[nodiscard]] long degree() const;
  [[nodiscard]] bool is_zero() const { return degree() < 0; }
  [[nodiscard]] Rational evaluate(const Rational& z) const;
  [[nodiscard]] IntegerPolynomial derivative() const;

  // Equal as rational functions of z (scales may differ).
  bool operator==(const IntegerPolynomial& other) const;

  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);

 private:
  void trim();

  std::vector<BigInt> coeffs_;
  BigInt scale_ = 1;
};

struct DeltaInterval {
  Rational lo;
  Rational hi;
};

// Cubic Taylor part of g around lo plus the two fourth-derivative bounds.
struct TaylorSandwich {
  BinomialSpec spec;
  DeltaInterval delta;
  std::array<Rational, 4> derivatives_at_lo;  // d^l g / dz^l (lo), l = 0..3
  Rational d4_minus;                          // d^4 g / dz^4 (lo)
  Rational d4_plus;                           // d^4 g / dz^4 (hi)

  [[nodiscard]] Rational cubic(const Rational& z) const;
  [[nodiscard]] Rational lower(const Rational& z) const;
  [[nodiscard]] Rational upper(const Rational& z) const;
};

// Oracle expansions are limited to n <= kOracleMaxN.
inline constexpr long kOracleMaxN = 60;

DeltaInterval delta_interval(const BinomialSpec& spec);

Rational eval_g(const BinomialSpec& spec, const Rational& z);

// Closed-form l-th derivative; l = 0 is g itself, otherwise
// 1 <= l <= min(b - 1, n - b).
Rational derivative_closed_form(const BinomialSpec& spec, long l, const Rational& z);
IntegerPolynomial derivative_closed_form_poly(const BinomialSpec& spec, long l);

// Independent route: expand g and differentiate coefficient-wise.
IntegerPolynomial derivative_oracle(const BinomialSpec& spec, long l);

// Fourth derivative at z; falls back to the oracle polynomial outside the
// closed form's range (b < 5 or n - b < 4).
Rational fourth_derivative(const BinomialSpec& spec, const Rational& z);

// Exact integral of g over [lo, hi].
Rational integrate_g(const BinomialSpec& spec, const Rational& lo, const Rational& hi);
// g_{b,n}: the integral over Delta_{b,n}; requires b < n.
Rational integrate_g_delta(const BinomialSpec& spec);

// Requires 5 <= b <= n/2.
TaylorSandwich taylor_sandwich(const BinomialSpec& spec);
// `points` evenly spaced rationals covering Delta_{b,n}, endpoints included.
std::vector<Rational> sandwich_grid(const BinomialSpec& spec, int points = 5);

BigInt eval_P(const BigInt& b, const BigInt& n);
inline BigInt eval_P(long b, long n) { return eval_P(BigInt(b), BigInt(n)); }

// P_{b,n} = leading + R_{b,n}.
struct PSplit {
  BigInt leading;
  BigInt remainder;
};
PSplit split_P(const BigInt& b, const BigInt& n);
BigInt eval_R(const BigInt& b, const BigInt& n);

// Q_{b,n} = d^4 g (1 - (b+1)/n) / (x^{b-5} (1-x)^{n-b-4}), x = (b+1)/n.
// Requires b <= n - 2.
Rational eval_Q(const BinomialSpec& spec);
// x (1-x)^2 (3bn + 46b - 57n + 46): Q minus non-negative terms.
Rational q_lower_bound(const BinomialSpec& spec);

struct Claim1Result {
  bool beta_ratio = false;    // p as ratio of integrals
  bool p_difference = false;  // p_{b+1,n} - p_{b,n} via g_{b,n}
  bool z_integral = false;    // z_{b,n} via the split integral
  bool z_difference = false;  // z_{b+1,n} - z_{b,n} via the split integrals
  [[nodiscard]] bool all() const { return beta_ratio && p_difference && z_integral && z_difference; }
};

// Requires 1 <= b < n.
Claim1Result verify_claim1_detail(const BinomialSpec& spec);
bool verify_claim1(const BinomialSpec& spec);

// Closed form equals the oracle for every 1 <= l <= min(b-1, n-b); n <= 60.
bool verify_claim2(const BinomialSpec& spec);

// Both sandwich bounds at each grid point; one report per failed bound
// (claim3-lower: lhs = lower bound, rhs = g; claim3-upper: lhs = g, rhs = upper).
std::vector<ViolationReport> verify_claim3(const BinomialSpec& spec, int points = 5);

}  // namespace rambin

#endif
