#ifndef RAMBIN_NUMERIC_HPP
#define RAMBIN_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rambin {

using BigInt = mpz_class;
// mpq_class is kept canonical: gcd(|num|, den) = 1 and den >= 1.
using Rational = mpq_class;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when an enclosure or float evaluation cannot reach the
// requested width within the precision budget.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a cost guard (size of an exact expansion) is exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(int s) {
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}
inline Sign sign_of(const BigInt& v) { return sign_of(sgn(v)); }
inline Sign sign_of(const Rational& v) { return sign_of(sgn(v)); }
inline int to_int(Sign s) { return static_cast<int>(s); }

// Outcome of a check that may not be decidable at the working precision.
enum class Verdict { Holds, Fails, Inconclusive };
inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "inconclusive";
  }
}

BigInt ipow(const BigInt& base, unsigned long exp);
BigInt ipow(long base, unsigned long exp);
Rational rpow(const Rational& base, unsigned long exp);
BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den);

// Parses "p/q", "p" or a plain decimal such as "0.05".
Rational parse_rational(const std::string& text);

// Exact "num/den" rendering; the denominator is always written.
std::string fraction_string(const Rational& q);

// Display-only decimal rendering with `digits` significant digits.
std::string decimal_string(const Rational& q, int digits = 20);

double to_double(const Rational& q);

// floor / ceil of a rational as big integers.
BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);

// Working decimal precision plus the sign-stability escalation rule.
struct PrecisionPolicy {
  int digits = 30;
  int max_escalations = 2;
  int guard_exponent = 2;

  PrecisionPolicy() = default;
  PrecisionPolicy(int digits_, int max_escalations_, int guard_exponent_);

  // Policy with the digit budget doubled `times` times.
  [[nodiscard]] PrecisionPolicy escalated(int times = 1) const;
  [[nodiscard]] unsigned long bits() const;
};

}  // namespace rambin

#endif
