#ifndef RAMBIN_INTERVAL_HPP
#define RAMBIN_INTERVAL_HPP

#include "rambin/numeric.hpp"

#include <string>

namespace rambin {

// Closed interval [lo, hi] with rational endpoints. Arithmetic is exact
// unless a rounding width (in significant bits) is given, in which case
// endpoints are rounded outward to dyadic rationals.
struct IntervalValue {
  Rational lo;
  Rational hi;

  IntervalValue() = default;
  IntervalValue(Rational lo_, Rational hi_);
  static IntervalValue point(const Rational& v) { return IntervalValue(v, v); }

  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] Rational midpoint() const { return (lo + hi) / 2; }
  [[nodiscard]] bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  [[nodiscard]] bool contains(const IntervalValue& o) const { return lo <= o.lo && o.hi <= hi; }
  [[nodiscard]] bool contains_zero() const { return lo <= 0 && hi >= 0; }
  [[nodiscard]] IntervalValue rounded(unsigned long bits) const;
  [[nodiscard]] std::string to_string(int digits = 20) const;
};

IntervalValue operator+(const IntervalValue& a, const IntervalValue& b);
IntervalValue operator-(const IntervalValue& a, const IntervalValue& b);
IntervalValue operator-(const IntervalValue& a);
IntervalValue operator*(const IntervalValue& a, const IntervalValue& b);
// Throws PrecisionError when the divisor contains zero.
IntervalValue operator/(const IntervalValue& a, const IntervalValue& b);

// Strict order: every point of a lies below every point of b.
inline bool certainly_less(const IntervalValue& a, const IntervalValue& b) { return a.hi < b.lo; }

// Outward rounding of a single value to `bits` significant bits.
Rational round_down(const Rational& v, unsigned long bits);
Rational round_up(const Rational& v, unsigned long bits);

// a^k; requires a.lo >= 0. bits = 0 keeps every step exact.
IntervalValue ipow(const IntervalValue& a, unsigned long k, unsigned long bits = 0);
// Requires a.lo >= 0.
IntervalValue sqrt(const IntervalValue& a, unsigned long bits);

// e^{-b} from the partial sums S_{terms-1}, S_terms of sum (-1)^k / k!,
// powered to b. Requires terms >= 3.
IntervalValue exp_neg_enclosure(long b, long terms, unsigned long bits = 0);
// e^{b} from sum 1/k! with the remainder bounded by 2/(terms+1)!.
IntervalValue exp_pos_enclosure(long b, long terms, unsigned long bits = 0);
// Series length so that 1/terms! < 2^{-bits}.
long series_terms_for_bits(unsigned long bits);

// Fixed 100-digit decimal bracket.
IntervalValue pi_enclosure();

}  // namespace rambin

#endif
