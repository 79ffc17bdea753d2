#include "rambin/interval.hpp"

#include <algorithm>
#include <cmath>

namespace rambin {

namespace {

// Binary exponent shift k so that |v| * 2^k has about `bits` bits.
long shift_for(const Rational& v, unsigned long bits) {
  const long num_bits = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 2));
  return static_cast<long>(bits) - (num_bits - den_bits);
}

Rational round_dir(const Rational& v, unsigned long bits, bool up) {
  if (bits == 0 || v == 0) return v;
  const long k = shift_for(v, bits);
  BigInt num = v.get_num();
  BigInt den = v.get_den();
  if (k >= 0) {
    num <<= static_cast<mp_bitcnt_t>(k);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-k);
  }
  BigInt q;
  if (up) {
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  Rational out(q);
  if (k >= 0) {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return out;
}

// Partial sum of sum_{k=0}^{last} sign^k / k!.
Rational factorial_series(long last, bool alternating) {
  // Accumulate over the common denominator last!.
  BigInt num = 0;
  BigInt tail = 1;  // last! / k!, walking k downward
  for (long k = last; k >= 0; --k) {
    if (alternating && (k % 2)) {
      num -= tail;
    } else {
      num += tail;
    }
    if (k > 0) tail *= k;
  }
  return make_rational(num, factorial(static_cast<unsigned long>(last)));
}

}  // namespace

IntervalValue::IntervalValue(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw DomainError("interval needs lo <= hi");
}

IntervalValue IntervalValue::rounded(unsigned long bits) const {
  return IntervalValue(round_down(lo, bits), round_up(hi, bits));
}

std::string IntervalValue::to_string(int digits) const {
  return "[" + decimal_string(lo, digits) + ", " + decimal_string(hi, digits) + "]";
}

Rational round_down(const Rational& v, unsigned long bits) { return round_dir(v, bits, false); }
Rational round_up(const Rational& v, unsigned long bits) { return round_dir(v, bits, true); }

IntervalValue operator+(const IntervalValue& a, const IntervalValue& b) {
  return IntervalValue(a.lo + b.lo, a.hi + b.hi);
}

IntervalValue operator-(const IntervalValue& a, const IntervalValue& b) {
  return IntervalValue(a.lo - b.hi, a.hi - b.lo);
}

IntervalValue operator-(const IntervalValue& a) { return IntervalValue(-a.hi, -a.lo); }

IntervalValue operator*(const IntervalValue& a, const IntervalValue& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return IntervalValue(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
}

IntervalValue operator/(const IntervalValue& a, const IntervalValue& b) {
  if (b.contains_zero()) throw PrecisionError("interval division by an interval containing 0");
  return a * IntervalValue(1 / b.hi, 1 / b.lo);
}

IntervalValue ipow(const IntervalValue& a, unsigned long k, unsigned long bits) {
  if (a.lo < 0) throw DomainError("interval power needs a non-negative base");
  // Square-and-multiply on each endpoint; rounding is monotone for non-negatives.
  auto power = [bits, k](Rational base, bool up) {
    Rational acc = 1;
    unsigned long e = k;
    while (e > 0) {
      if (e & 1UL) acc = round_dir(acc * base, bits, up);
      e >>= 1;
      if (e > 0) base = round_dir(base * base, bits, up);
    }
    return acc;
  };
  return IntervalValue(power(a.lo, false), power(a.hi, true));
}

IntervalValue sqrt(const IntervalValue& a, unsigned long bits) {
  if (a.lo < 0) throw DomainError("interval sqrt needs a non-negative operand");
  // sqrt(q) between isqrt(floor(q 4^k)) / 2^k and ceil-isqrt(ceil(q 4^k)) / 2^k.
  const auto k = static_cast<mp_bitcnt_t>(bits + 2);
  auto root = [k](const Rational& q, bool up) {
    Rational scaled = q;
    mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), 2 * k);
    BigInt s = up ? ceil_of(scaled) : floor_of(scaled);
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (up && r * r < s) r += 1;
    Rational out(r);
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), k);
    return out;
  };
  return IntervalValue(root(a.lo, false), root(a.hi, true));
}

long series_terms_for_bits(unsigned long bits) {
  // Smallest T with T! > 2^bits.
  double log2_fact = 0;
  long t = 1;
  while (log2_fact <= static_cast<double>(bits) + 4) {
    ++t;
    log2_fact += std::log2(static_cast<double>(t));
  }
  return std::max(t, 3L);
}

IntervalValue exp_neg_enclosure(long b, long terms, unsigned long bits) {
  if (terms < 3) throw DomainError("exp_neg_enclosure needs terms >= 3");
  if (b < 0) throw DomainError("exp_neg_enclosure needs b >= 0");
  Rational s_prev = factorial_series(terms - 1, true);
  Rational s_last = factorial_series(terms, true);
  IntervalValue e1(std::min(s_prev, s_last), std::max(s_prev, s_last));
  return ipow(e1.rounded(bits), static_cast<unsigned long>(b), bits);
}

IntervalValue exp_pos_enclosure(long b, long terms, unsigned long bits) {
  if (terms < 3) throw DomainError("exp_pos_enclosure needs terms >= 3");
  if (b < 0) throw DomainError("exp_pos_enclosure needs b >= 0");
  Rational s = factorial_series(terms, false);
  IntervalValue e(s, s + make_rational(BigInt(2), factorial(static_cast<unsigned long>(terms + 1))));
  return ipow(e.rounded(bits), static_cast<unsigned long>(b), bits);
}

IntervalValue pi_enclosure() {
  static const IntervalValue pi = [] {
    const BigInt digits(
        "31415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679");
    const BigInt scale = ipow(BigInt(10), 100);
    return IntervalValue(make_rational(digits, scale), make_rational(digits + 1, scale));
  }();
  return pi;
}

}  // namespace rambin
