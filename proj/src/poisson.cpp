#include "rambin/poisson.hpp"

#include "rambin/parallel.hpp"

#include <cmath>

namespace rambin {

namespace {

unsigned long ul(long v) { return static_cast<unsigned long>(v); }

// Working precision for quantities built from e^{+-b}.
struct Working {
  unsigned long bits;
  long terms;
};

Working working_for(long b, const PrecisionPolicy& policy) {
  const auto guard = static_cast<unsigned long>(std::log2(static_cast<double>(b) + 1)) + 16;
  const unsigned long bits = policy.bits() + guard;
  return Working{bits, series_terms_for_bits(bits)};
}

IntervalValue exp_neg(long b, const PrecisionPolicy& policy) {
  auto w = working_for(b, policy);
  return exp_neg_enclosure(b, w.terms, w.bits);
}

IntervalValue exp_pos(long b, const PrecisionPolicy& policy) {
  auto w = working_for(b, policy);
  return exp_pos_enclosure(b, w.terms, w.bits);
}

void require_b(long b) {
  if (b < 1) throw DomainError("Poisson quantities need b >= 1");
}

// The relative width a caller can expect at this policy.
void require_width(const IntervalValue& v, const PrecisionPolicy& policy) {
  const Rational mag = v.hi > 0 ? Rational(v.hi) : Rational(-v.lo);
  if (mag == 0) return;
  const long target = std::max(policy.digits - 10, 1);
  if (v.width() * ipow(BigInt(10), ul(target)) > mag) {
    throw PrecisionError("enclosure wider than the requested precision");
  }
}

IntervalValue sqrt_2pi(const PrecisionPolicy& policy) {
  return sqrt(IntervalValue::point(2) * pi_enclosure(), policy.bits() + 16);
}

Verdict less(const IntervalValue& a, const IntervalValue& b) {
  if (a.hi < b.lo) return Verdict::Holds;
  if (a.lo >= b.hi) return Verdict::Fails;
  return Verdict::Inconclusive;
}

Verdict less_equal(const IntervalValue& a, const IntervalValue& b) {
  if (a.hi <= b.lo) return Verdict::Holds;
  if (a.lo > b.hi) return Verdict::Fails;
  return Verdict::Inconclusive;
}

Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::Fails || b == Verdict::Fails) return Verdict::Fails;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Holds;
}

IntervalValue pt(const Rational& v) { return IntervalValue::point(v); }

// Checks for one b at one precision; the decreasing checks need b + 1.
std::vector<PoissonCheck> checks_at(const PoissonSummary& s, const PoissonSummary* next,
                                    const IntervalValue& beta_bound, int digits) {
  std::vector<PoissonCheck> out;
  auto add = [&](const char* id, Verdict v) { out.push_back(PoissonCheck{id, s.b, v, digits}); };
  add("y-range", both(less(pt(make_rational(1, 3)), s.y), less(s.y, pt(make_rational(1, 2)))));
  add("alpha-range", both(less_equal(pt(make_rational(2, 21)), s.alpha), less_equal(s.alpha, pt(make_rational(8, 45)))));
  Verdict beta_upper = (s.b == 1 && beta_bound_attained_at_one()) ? Verdict::Holds
                                                                  : less_equal(s.beta, beta_bound);
  add("beta-range", both(less(pt(make_rational(-1, 3)), s.beta), beta_upper));
  if (next != nullptr) {
    add("y-decreasing", less(next->y, s.y));
    add("alpha-decreasing", less(next->alpha, s.alpha));
  }
  return out;
}

}  // namespace

Rational poisson_tail_factor(long b) {
  require_b(b);
  // sum_{i<b} b^i / i! over the common denominator (b-1)!.
  BigInt num = 0;
  BigInt coeff = 1;  // (b-1)! / i!, walking i downward
  std::vector<BigInt> bpow(ul(b));
  bpow[0] = 1;
  for (long i = 1; i < b; ++i) bpow[ul(i)] = bpow[ul(i - 1)] * b;
  for (long i = b - 1; i >= 0; --i) {
    num += bpow[ul(i)] * coeff;
    if (i > 0) coeff *= i;
  }
  return make_rational(num, factorial(ul(b - 1)));
}

Rational poisson_pmf_factor(long b) {
  require_b(b);
  return make_rational(ipow(b, ul(b)), factorial(ul(b)));
}

IntervalValue poisson_tail(long b, const PrecisionPolicy& policy) {
  require_b(b);
  IntervalValue v = pt(poisson_tail_factor(b)) * exp_neg(b, policy);
  require_width(v, policy);
  return v;
}

IntervalValue y_poisson(long b, const PrecisionPolicy& policy) {
  require_b(b);
  // y = (e^b / 2 - F) / G with exact F, G.
  IntervalValue num = exp_pos(b, policy) * pt(make_rational(1, 2)) - pt(poisson_tail_factor(b));
  IntervalValue y = num * pt(1 / poisson_pmf_factor(b));
  require_width(y, policy);
  return y;
}

namespace {

std::pair<IntervalValue, IntervalValue> alpha_beta_from(long b, const IntervalValue& y,
                                                        const PrecisionPolicy& policy) {
  const IntervalValue gap = y - pt(make_rational(1, 3));
  if (!(gap.lo > 0)) throw PrecisionError("y enclosure not strictly above 1/3");
  IntervalValue alpha = pt(make_rational(4, 135)) / gap - pt(Rational(b));
  const IntervalValue d = pt(make_rational(4, 135 * b) + make_rational(1, 3)) - y;
  if (!(d.lo > 0)) throw PrecisionError("beta denominator enclosure not strictly positive");
  IntervalValue beta = sqrt(pt(make_rational(8, 2835)) / d, policy.bits() + 16) - pt(Rational(b));
  return {alpha, beta};
}

}  // namespace

std::pair<IntervalValue, IntervalValue> alpha_beta(long b, const PrecisionPolicy& policy) {
  return alpha_beta_from(b, y_poisson(b, policy), policy);
}

PoissonSummary poisson_summary(long b, const PrecisionPolicy& policy) {
  require_b(b);
  PoissonSummary s;
  s.b = b;
  const IntervalValue en = exp_neg(b, policy);
  s.tail = pt(poisson_tail_factor(b)) * en;
  s.pmf_at_b = pt(poisson_pmf_factor(b)) * en;
  s.y = y_poisson(b, policy);
  auto [a, bt] = alpha_beta_from(b, s.y, policy);
  s.alpha = a;
  s.beta = bt;
  return s;
}

IntervalValue beta_upper_bound(const PrecisionPolicy& policy) {
  const unsigned long bits = policy.bits() + 16;
  const IntervalValue e = exp_pos_enclosure(1, series_terms_for_bits(bits), bits);
  const IntervalValue inner = pt(21) * (pt(368) - pt(135) * e);
  return pt(-1) + pt(4) / sqrt(inner, bits);
}

bool beta_bound_attained_at_one() {
  // beta_1 + 1 = sqrt(8 / (2835 (4/135 + 1/3 + 1 - e/2))) and
  // bound + 1 = sqrt(16 / (21 (368 - 135 e))): equal iff the radicand
  // denominators agree coefficient-wise in e after scaling by 8 and 16.
  const Rational c0_beta = Rational(2835) * (make_rational(4, 135) + make_rational(1, 3) + 1) / 8;
  const Rational c1_beta = make_rational(2835, 2) / 8;
  const Rational c0_bound = make_rational(21 * 368, 16);
  const Rational c1_bound = make_rational(21 * 135, 16);
  return c0_beta == c0_bound && c1_beta == c1_bound;
}

bool factorial_moment_identity(long b, long s) {
  if (s < 1 || s > b) throw DomainError("factorial moment identity needs 1 <= s <= b");
  // LHS/e^{-b} = sum_{s<=i<b} b^i / (i-s)!; RHS/e^{-b} = b^s sum_{i<b-s} b^i / i!.
  Rational lhs = 0;
  Rational rhs = 0;
  Rational term = 1;  // b^i / i!
  for (long i = 0; i < b; ++i) {
    if (i > 0) term = term * b / i;
    if (i >= s) lhs += term * make_rational(factorial(ul(i)), factorial(ul(i - s)));
    if (i < b - s) rhs += term;
  }
  return lhs == rhs * Rational(ipow(b, ul(s)));
}

Rational truncated_moment_factor(long b, long k, MomentKind which) {
  require_b(b);
  if (k < 1) throw DomainError("truncated moments need k >= 1");
  Rational sum = 0;
  Rational term = 1;
  for (long i = 0; i < b; ++i) {
    if (i > 0) term = term * b / i;
    BigInt w = ipow(b - i, ul(k));
    if (which == MomentKind::H2) w *= i;
    sum += term * w;
  }
  return sum;
}

IntervalValue truncated_moment(long b, long k, MomentKind which, const PrecisionPolicy& policy) {
  return pt(truncated_moment_factor(b, k, which)) * exp_neg(b, policy);
}

BigInt falling_factorial_sum(long k, long s) {
  if (k < 0 || s < 0) throw DomainError("falling_factorial_sum needs k, s >= 0");
  BigInt sum = 0;
  for (long i = s; i <= k; ++i) {
    BigInt term = binomial(ul(k), ul(i)) * factorial(ul(i)) / factorial(ul(i - s));
    if (i % 2) term = -term;
    sum += term;
  }
  return sum;
}

namespace {

IntervalValue abs_of(const IntervalValue& v) {
  if (v.lo >= 0) return v;
  if (v.hi <= 0) return -v;
  return IntervalValue(0, std::max(Rational(-v.lo), Rational(v.hi)));
}

ResidualCheck residual(const char* id, long b, const IntervalValue& scaled, const Rational& bound) {
  ResidualCheck r{id, b, scaled, bound, Verdict::Inconclusive};
  if (scaled.hi <= bound) {
    r.verdict = Verdict::Holds;
  } else if (scaled.lo > bound) {
    r.verdict = Verdict::Fails;
  }
  return r;
}

}  // namespace

ResidualCheck tail_expansion_residual(long b, const PrecisionPolicy& policy) {
  require_b(b);
  const unsigned long bits = policy.bits() + 16;
  const IntervalValue c = sqrt_2pi(policy);
  const IntervalValue rb = sqrt(pt(Rational(b)), bits);
  const IntervalValue approx = pt(make_rational(1, 2)) - pt(Rational(1)) / (pt(3) * c * rb) -
                               pt(Rational(1)) / (pt(540) * c * pt(Rational(b)) * rb);
  const IntervalValue scale = pt(Rational(b * b)) * rb;
  return residual("tail-expansion", b, scale * abs_of(poisson_tail(b, policy) - approx),
                  make_rational(1985, 1000000));
}

std::vector<ResidualCheck> moment_expansion_residuals(long b, const PrecisionPolicy& policy) {
  require_b(b);
  const unsigned long bits = policy.bits() + 16;
  const IntervalValue c = sqrt_2pi(policy);
  const IntervalValue rb = sqrt(pt(Rational(b)), bits);
  const IntervalValue B = pt(Rational(b));
  std::vector<ResidualCheck> out;

  const IntervalValue h11 = truncated_moment(b, 1, MomentKind::H1, policy);
  const IntervalValue lead11 = rb / c - pt(Rational(1)) / (pt(12) * c * rb);
  out.push_back(residual("claim4-h1-1", b, B * abs_of(h11 - lead11), make_rational(23871, 100000000)));

  const IntervalValue h21 = truncated_moment(b, 2, MomentKind::H1, policy);
  const IntervalValue lead21 = B * (pt(make_rational(1, 2)) - pt(Rational(1)) / (pt(3) * c * rb));
  out.push_back(residual("claim4-h2-1", b, abs_of(h21 - lead21), make_rational(11977, 100000000)));

  const IntervalValue h31 = truncated_moment(b, 3, MomentKind::H1, policy);
  const IntervalValue lead31 = pt(2) * B * rb / c;
  out.push_back(residual("claim4-h3-1", b, abs_of(h31 - lead31) / B, make_rational(5954, 10000)));

  const IntervalValue h12 = truncated_moment(b, 1, MomentKind::H2, policy);
  const IntervalValue lead12 = B * rb / c;
  out.push_back(residual("claim4-h1-2", b, abs_of(h12 - lead12) / B, make_rational(59309, 100000)));
  return out;
}

long PoissonSuite::count(Verdict v) const {
  long c = 0;
  for (const auto& ch : checks) c += ch.verdict == v ? 1 : 0;
  return c;
}

PoissonSuite poisson_suite(long b_max, const PrecisionPolicy& policy, int workers) {
  PoissonSuite suite;
  if (b_max < 1) return suite;
  struct Task {
    PoissonSummary summary;
    std::vector<PoissonCheck> checks;
  };
  auto tasks = parallel_map(ul(b_max), workers, [&](size_t idx) {
    const long b = static_cast<long>(idx) + 1;
    Task t;
    for (int level = 0; level <= policy.max_escalations; ++level) {
      const PrecisionPolicy p = policy.escalated(level);
      std::vector<PoissonCheck> checks;
      try {
        t.summary = poisson_summary(b, p);
        PoissonSummary next;
        const bool has_next = b < b_max;
        if (has_next) next = poisson_summary(b + 1, p);
        checks = checks_at(t.summary, has_next ? &next : nullptr, beta_upper_bound(p), p.digits);
      } catch (const PrecisionError&) {
        if (level < policy.max_escalations) continue;
        checks = {PoissonCheck{"enclosure", b, Verdict::Inconclusive, p.digits}};
      }
      t.checks = std::move(checks);
      bool settled = true;
      for (const auto& c : t.checks) settled = settled && c.verdict != Verdict::Inconclusive;
      if (settled) break;
    }
    return t;
  });
  for (auto& t : tasks) {
    suite.summaries.push_back(std::move(t.summary));
    for (auto& c : t.checks) suite.checks.push_back(std::move(c));
  }
  return suite;
}

}  // namespace rambin
