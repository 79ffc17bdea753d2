#include "rambin/asymptotics.hpp"

#include "rambin/parallel.hpp"

#include <mpfr.h>

#include <cmath>
#include <string>

namespace rambin {

namespace {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }
  [[nodiscard]] Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

unsigned long ul(long v) { return static_cast<unsigned long>(v); }

// 2^{1 - prec}
Rational unit_roundoff(mpfr_prec_t prec) {
  Rational u(1);
  mpq_div_2exp(u.get_mpq_t(), u.get_mpq_t(), static_cast<mp_bitcnt_t>(prec - 1));
  return u;
}

Rational guard_threshold(const PrecisionPolicy& policy) {
  return make_rational(BigInt(1), ipow(BigInt(10), ul(policy.digits / policy.guard_exponent)));
}

HighPrecValue exact_value(const Rational& v) { return HighPrecValue{v, 0, 0, true}; }

Rational abs_q(const Rational& v) { return v < 0 ? Rational(-v) : v; }

}  // namespace

HighPrecValue z_highprec(const BinomialSpec& spec, const PrecisionPolicy& policy) {
  const long b = spec.b, n = spec.n;
  if (b == n) return exact_value(make_rational(1, 2));
  const auto prec = static_cast<mpfr_prec_t>(policy.bits());
  const mpfr_rnd_t rnd = MPFR_RNDN;

  // t_b = C(n,b) (b/n)^b ((n-b)/n)^{n-b}
  Real t(prec), tmp(prec);
  const BigInt c = binomial(ul(n), ul(b));
  mpfr_set_z(t.get(), c.get_mpz_t(), rnd);
  mpfr_set_ui(tmp.get(), ul(b), rnd);
  mpfr_div_ui(tmp.get(), tmp.get(), ul(n), rnd);
  mpfr_pow_ui(tmp.get(), tmp.get(), ul(b), rnd);
  mpfr_mul(t.get(), t.get(), tmp.get(), rnd);
  mpfr_set_ui(tmp.get(), ul(n - b), rnd);
  mpfr_div_ui(tmp.get(), tmp.get(), ul(n), rnd);
  mpfr_pow_ui(tmp.get(), tmp.get(), ul(n - b), rnd);
  mpfr_mul(t.get(), t.get(), tmp.get(), rnd);

  // half_inv = 1 / (2 t_b)
  Real half_inv(prec);
  mpfr_ui_div(half_inv.get(), 1, t.get(), rnd);
  mpfr_div_ui(half_inv.get(), half_inv.get(), 2, rnd);

  // S = sum_{i<b} P(xi = i) / P(xi = b) via r_{i-1} = r_i i (n-b) / ((n-i+1) b)
  Real r(prec), s(prec);
  mpfr_set_ui(r.get(), 1, rnd);
  mpfr_set_ui(s.get(), 0, rnd);
  for (long i = b; i >= 1; --i) {
    mpfr_mul_ui(r.get(), r.get(), ul(i), rnd);
    mpfr_mul_ui(r.get(), r.get(), ul(n - b), rnd);
    mpfr_div_ui(r.get(), r.get(), ul(n - i + 1), rnd);
    mpfr_div_ui(r.get(), r.get(), ul(b), rnd);
    mpfr_add(s.get(), s.get(), r.get(), rnd);
  }

  Real z(prec);
  mpfr_sub(z.get(), half_inv.get(), s.get(), rnd);

  const Rational u = unit_roundoff(prec);
  const Rational hv = half_inv.to_rational();
  const Rational sv = s.to_rational();
  // Relative error of t_b is at most (n + 10) u (correctly rounded pow_ui
  // amplifies an input error by its exponent); each r_i carries at most
  // 4 (b - i + 1) u and the running sum adds one more rounding per step.
  Rational err = hv * (2 * b + n + 10) * u + sv * (5 * b + 5) * u + abs_q(z.to_rational()) * u;
  err *= 2;

  HighPrecValue out{z.to_rational(), err, policy.digits, false};
  if (err > guard_threshold(policy)) {
    throw PrecisionError("z_highprec error bound exceeds the guard at " + std::to_string(policy.digits) +
                         " digits");
  }
  return out;
}

namespace {

// Value of z_{b,n} honouring the exact anchors z_{b,b} = z_{b,2b} = 1/2.
HighPrecValue z_anchored(long b, long n, const PrecisionPolicy& policy) {
  if (n == b || n == 2 * b) return exact_value(make_rational(1, 2));
  return z_highprec(BinomialSpec(b, n), policy);
}

struct FloatDiff {
  Rational value;
  Rational error;
};

FloatDiff float_diff(long b, long n, const PrecisionPolicy& policy) {
  HighPrecValue lo = z_anchored(b, n, policy);
  HighPrecValue hi = z_anchored(b + 1, n, policy);
  return FloatDiff{hi.value - lo.value, hi.error + lo.error};
}

}  // namespace

SignResult z_diff_sign(long b, long n, const PrecisionPolicy& policy, long exact_cutoff) {
  if (b < 1 || b >= n) throw DomainError("z_diff_sign needs 1 <= b < n");
  if (n <= exact_cutoff) return SignResult{z_diff_sign_exact(b, n), true, true, 0};

  SignResult out;
  bool have_previous = false;
  Sign previous = Sign::Zero;
  for (int level = 0; level <= policy.max_escalations; ++level) {
    const PrecisionPolicy p = policy.escalated(level);
    out.digits = p.digits;
    FloatDiff d;
    try {
      d = float_diff(b, n, p);
    } catch (const PrecisionError&) {
      have_previous = false;
      continue;
    }
    const Rational mag = abs_q(d.value);
    const bool clear = mag > d.error && mag > guard_threshold(p);
    if (!clear) {
      have_previous = false;
      continue;
    }
    const Sign s = sign_of(d.value);
    if (have_previous && s == previous) {
      out.sign = s;
      out.conclusive = true;
      return out;
    }
    have_previous = true;
    previous = s;
  }
  return out;
}

HighPrecValue claim5_residual(long b, long n, const PrecisionPolicy& policy) {
  if (b < 1 || n < 10 * b * b) throw DomainError("claim5_residual needs n >= 10 b^2");
  const Rational approx = make_rational(1, 3) + make_rational(4, 135 * b) + make_rational(b, 3 * n);
  if (n <= kExactCutoff) {
    return exact_value(ramanujan_z(BinomialSpec(b, n)) - approx);
  }
  HighPrecValue z = z_highprec(BinomialSpec(b, n), policy);
  z.value -= approx;
  return z;
}

Rational claim5_bound() { return make_rational(95966, 100000000); }

Claim5Check claim5_check(long b, const PrecisionPolicy& policy) {
  Claim5Check out;
  out.b = b;
  out.n = 10 * b * b;
  for (int level = 0; level <= policy.max_escalations; ++level) {
    try {
      out.residual = claim5_residual(b, out.n, policy.escalated(level));
    } catch (const PrecisionError&) {
      continue;
    }
    const Rational mag = abs_q(out.residual.value);
    const Rational k2 = claim5_bound() * claim5_bound();
    const Rational b3 = Rational(ipow(BigInt(b), 3));
    const Rational hi = mag + out.residual.error;
    const Rational lo = mag > out.residual.error ? Rational(mag - out.residual.error) : Rational(0);
    if (b3 * hi * hi <= k2) {
      out.verdict = Verdict::Holds;
    } else if (b3 * lo * lo > k2) {
      out.verdict = Verdict::Fails;
    } else {
      out.verdict = Verdict::Inconclusive;
      continue;
    }
    break;
  }
  return out;
}

ThresholdReport theorem2_threshold(long n, const PrecisionPolicy& policy, int workers, bool allow_small) {
  if (!allow_small && n < 10000) throw DomainError("theorem2_threshold needs n >= 10^4");
  if (n < 8) throw DomainError("theorem2_threshold needs n >= 8");
  ThresholdReport rep;
  rep.n = n;
  rep.predicted = std::sqrt(77.0 * static_cast<double>(n) / 360.0);
  rep.window_lo = std::max(2L, static_cast<long>(std::floor(rep.predicted / 2)));
  rep.window_hi = std::min(n / 2 - 1, static_cast<long>(std::ceil(2 * rep.predicted)));

  // Signs for b = window_lo - 1 .. window_hi.
  const long first = rep.window_lo - 1;
  const long count = rep.window_hi - first + 1;
  auto signs = parallel_map(ul(count), workers, [&](size_t idx) {
    return z_diff_sign(first + static_cast<long>(idx), n, policy);
  });
  for (long k = 1; k < count; ++k) {
    const long b = first + k;
    const SignResult& cur = signs[ul(k)];
    const SignResult& prev = signs[ul(k - 1)];
    if (!cur.conclusive) {
      rep.inconclusive.push_back(b);
      continue;
    }
    if (!prev.conclusive) continue;
    if (cur.sign != prev.sign) {
      rep.sign_changes.push_back(b);
      if (rep.b_star_low == 0 && prev.sign == Sign::Negative && cur.sign == Sign::Positive) {
        rep.b_star_low = b;
      }
    }
  }
  if (!signs.front().conclusive) rep.inconclusive.insert(rep.inconclusive.begin(), first);
  if (rep.b_star_low > 0) {
    rep.b_star_high = n - 1 - rep.b_star_low;
    rep.ratio_low = static_cast<double>(rep.b_star_low) / rep.predicted;
    rep.ratio_high = static_cast<double>(n - 1 - rep.b_star_high) / rep.predicted;
  }
  const SignResult mid = z_diff_sign(n / 2 - 1, n, policy);
  rep.middle_sign = mid.conclusive ? mid.sign : Sign::Zero;
  return rep;
}

}  // namespace rambin
