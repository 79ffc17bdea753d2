#include "rambin/numeric.hpp"

#include <cmath>
#include <cstdlib>

namespace rambin {

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt ipow(long base, unsigned long exp) { return ipow(BigInt(base), exp); }

Rational rpow(const Rational& base, unsigned long exp) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  // Powers of a canonical fraction stay canonical; 0^0 = 1 by convention.
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash), 10);
      BigInt den(text.substr(slash + 1), 10);
      return make_rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text, 10));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-") throw DomainError("bad decimal");
    BigInt num(digits, 10);
    return make_rational(num, ipow(10, text.size() - dot - 1));
  } catch (const std::invalid_argument&) {
    throw DomainError("cannot parse rational '" + text + "'");
  }
}

std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q, int digits) {
  if (q == 0) return "0";
  // Scale so that the integer part carries `digits` significant digits.
  BigInt num = abs(q.get_num());
  const BigInt& den = q.get_den();
  long exp10 = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
               static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  long shift = digits - exp10;
  BigInt scaled;
  if (shift >= 0) {
    scaled = num * ipow(10, shift) / den;
  } else {
    scaled = num / (den * ipow(10, -shift));
  }
  std::string s = scaled.get_str();
  // Position of the decimal point relative to the digit string.
  long point = static_cast<long>(s.size()) - shift;
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<size_t>(-point), '0') + s;
  } else if (point >= static_cast<long>(s.size())) {
    out = s + std::string(static_cast<size_t>(point - static_cast<long>(s.size())), '0');
  } else {
    out = s.substr(0, static_cast<size_t>(point)) + "." + s.substr(static_cast<size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return (sgn(q) < 0 ? "-" : "") + out;
}

double to_double(const Rational& q) {
  // mpq_get_d truncates; adequate for display and heuristics only.
  return mpq_get_d(q.get_mpq_t());
}

BigInt floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil_of(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

PrecisionPolicy::PrecisionPolicy(int digits_, int max_escalations_, int guard_exponent_)
    : digits(digits_), max_escalations(max_escalations_), guard_exponent(guard_exponent_) {
  if (digits < 30) throw DomainError("precision policy: digits must be >= 30");
  if (max_escalations < 1) throw DomainError("precision policy: max_escalations must be >= 1");
  if (guard_exponent < 2) throw DomainError("precision policy: guard_exponent must be >= 2");
}

PrecisionPolicy PrecisionPolicy::escalated(int times) const {
  PrecisionPolicy p = *this;
  for (int i = 0; i < times; ++i) p.digits *= 2;
  return p;
}

unsigned long PrecisionPolicy::bits() const {
  return static_cast<unsigned long>(std::ceil(digits * 3.3219280948873623)) + 16;
}

}  // namespace rambin
