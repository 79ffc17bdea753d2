#include "rambin/smalldev.hpp"

#include "rambin/parallel.hpp"

#include <bit>
#include <cstdint>

namespace rambin {

namespace {

unsigned long ul(long v) { return static_cast<unsigned long>(v); }

// P(Bin(n, p) < k) for rational p in [0, 1].
Rational binomial_below(long n, const Rational& p, long k) {
  if (k <= 0) return 0;
  if (k > n) return 1;
  const BigInt& u = p.get_num();
  const BigInt& w = p.get_den();
  const BigInt v = w - u;
  if (v == 0) return 0;  // p = 1: all mass at n
  // sum_{i<k} C(n,i) u^i v^{n-i}
  BigInt sum = 0;
  BigInt coeff = 1;
  BigInt upow = 1;
  for (long i = 0; i < k; ++i) {
    sum += coeff * upow * ipow(v, ul(n - i));
    coeff = coeff * (n - i) / (i + 1);
    upow *= u;
  }
  return make_rational(sum, ipow(w, ul(n)));
}

constexpr long kBruteMaxN = 20;

// popcount histograms of all n-bit masks, n = 0..20
const std::vector<std::vector<long>>& popcount_histograms() {
  static const std::vector<std::vector<long>> table = [] {
    std::vector<std::vector<long>> t(kBruteMaxN + 1);
    for (long n = 0; n <= kBruteMaxN; ++n) {
      t[ul(n)].assign(ul(n + 1), 0);
      const std::uint32_t top = std::uint32_t{1} << n;
      for (std::uint32_t mask = 0; mask < top; ++mask) ++t[ul(n)][ul(std::popcount(mask))];
    }
    return t;
  }();
  return table;
}

}  // namespace

TwoPointDist::TwoPointDist(Rational alpha_, Rational beta_) : alpha(std::move(alpha_)), beta(std::move(beta_)) {
  if (alpha < 0 || alpha >= 1 || beta <= 1) throw DomainError("two-point law needs 0 <= alpha < 1 < beta");
}

Rational TwoPointDist::p_high() const { return (1 - alpha) / (beta - alpha); }

SmallDevSpec::SmallDevSpec(Rational c_, long b_, long n_) : c(std::move(c_)), b(b_), n(n_) {
  if (c <= 0) throw DomainError("c must be positive");
  if (b < 1 || b > n) throw DomainError("need 1 <= b <= n");
  if (!(Rational(b) < n + c)) throw DomainError("need b < n + c");
}

Rational tilde_p(const SmallDevSpec& spec) {
  const Rational p = Rational(spec.b) / (spec.n + spec.c);
  return binomial_below(spec.n, p, spec.b);
}

InequalityCertificate verify_samuels(long n_max, int workers) {
  if (n_max < 4) throw DomainError("verify_samuels needs n_max >= 4");
  InequalityCertificate cert;
  cert.claim_id = "eq-Samuels_equivalent";
  cert.range = "2<=b, 2b<=n<=" + std::to_string(n_max);
  auto parts = parallel_map(ul(n_max - 3), workers, [&](size_t i) {
    const long n = static_cast<long>(i) + 4;
    const Rational floor_value = tilde_p(1, n);
    std::vector<ViolationReport> w;
    for (long b = 2; 2 * b <= n; ++b) {
      const Rational v = tilde_p(b, n);
      if (floor_value > v) w.push_back(ViolationReport::make("eq-Samuels_equivalent", b, n, floor_value, v));
    }
    return w;
  });
  cert.witnesses = flatten(std::move(parts));
  for (long n = 4; n <= n_max; ++n) cert.points_checked += n / 2 - 1;
  cert.finalize();
  return cert;
}

TwoPointTail two_point_tail(const TwoPointDist& dist, long n) {
  if (n < 1) throw DomainError("n must be positive");
  const Rational r = (n + 1 - n * dist.alpha) / (dist.beta - dist.alpha);
  const BigInt ceiling = ceil_of(r);
  if (ceiling > n) return TwoPointTail{n + 1, 1};
  const long b = ceiling.get_si();
  return TwoPointTail{b, binomial_below(n, dist.p_high(), b)};
}

Rational two_point_tail_bruteforce(const TwoPointDist& dist, long n) {
  if (n < 1 || n > kBruteMaxN) throw ResourceError("brute-force oracle limited to 1 <= n <= 20");
  const auto& hist = popcount_histograms()[ul(n)];
  const Rational p = dist.p_high();
  const Rational q = 1 - p;
  Rational total = 0;
  for (long k = 0; k <= n; ++k) {
    // k draws at beta, n - k at alpha
    const Rational sum = k * dist.beta + (n - k) * dist.alpha;
    if (sum < n + 1) total += hist[ul(k)] * rpow(p, ul(k)) * rpow(q, ul(n - k));
  }
  return total;
}

bool on_equality_family(const Rational& alpha, const Rational& beta, long n) {
  if (alpha != 0) return false;
  const Rational r = (n + 1) / beta;
  return r.get_den() == 1;
}

ConjectureScan conjecture_scan(long n, const Rational& step, int workers, Rational beta_max) {
  if (n < 1 || n > 60) throw ResourceError("conjecture_scan limited to 1 <= n <= 60");
  if (step <= 0 || step > make_rational(1, 10)) throw DomainError("grid step must lie in (0, 1/10]");
  if (beta_max == 0) beta_max = n + 2;
  ConjectureScan out;
  out.n = n;
  out.step = step;

  std::vector<Rational> alphas;
  for (Rational a = 0; a < 1; a += step) alphas.push_back(a);

  struct Part {
    long points = 0;
    std::vector<ViolationReport> violations;
    std::vector<EqualityWitness> equalities;
    std::vector<ViolationReport> reduction_failures;
    long oracle_checked = 0;
    std::vector<ViolationReport> oracle_mismatches;
    Rational minimum = 2;
    Rational min_alpha, min_beta;
  };
  auto parts = parallel_map(alphas.size(), workers, [&](size_t i) {
    Part part;
    const Rational& alpha = alphas[i];
    for (Rational beta = 1 + step; beta <= beta_max; beta += step) {
      ++part.points;
      const TwoPointDist dist(alpha, beta);
      const TwoPointTail t = two_point_tail(dist, n);
      if (n <= kBruteMaxN) {
        ++part.oracle_checked;
        const Rational brute = two_point_tail_bruteforce(dist, n);
        if (brute != t.p) part.oracle_mismatches.push_back(ViolationReport::make("two_point_oracle", t.b, n, t.p, brute));
      }
      if (t.p < part.minimum) {
        part.minimum = t.p;
        part.min_alpha = alpha;
        part.min_beta = beta;
      }
      if (t.b > n) continue;  // certain event
      const Rational ratio = make_rational(t.b, n + 1);
      const Rational prob = dist.p_high();
      if (prob > ratio || (prob == ratio && !on_equality_family(alpha, beta, n))) {
        part.reduction_failures.push_back(ViolationReport::make("two_point_reduction", t.b, n, prob, ratio));
      }
      const Rational bound = tilde_p(t.b, n);
      if (t.p < bound) {
        auto v = ViolationReport::make("conjecture", t.b, n, t.p, bound);
        v.claim_id += "@alpha=" + fraction_string(alpha) + ",beta=" + fraction_string(beta);
        part.violations.push_back(std::move(v));
      } else if (t.p == bound) {
        part.equalities.push_back(EqualityWitness{alpha, beta, t.b, t.p});
      }
    }
    return part;
  });
  out.minimum = 2;
  for (auto& part : parts) {
    out.points += part.points;
    for (auto& v : part.violations) out.violations.push_back(std::move(v));
    for (auto& e : part.equalities) out.equalities.push_back(std::move(e));
    for (auto& v : part.reduction_failures) out.reduction_failures.push_back(std::move(v));
    out.oracle_checked += part.oracle_checked;
    for (auto& v : part.oracle_mismatches) out.oracle_mismatches.push_back(std::move(v));
    if (part.minimum < out.minimum) {
      out.minimum = part.minimum;
      out.minimum_alpha = part.min_alpha;
      out.minimum_beta = part.min_beta;
    }
  }
  return out;
}

MonotonicityScan tilde_p_monotonicity_scan(const Rational& c, long n_max, int workers) {
  if (n_max > 400) throw ResourceError("monotonicity scan limited to n <= 400");
  if (c <= 0) throw DomainError("c must be positive");
  MonotonicityScan out;
  if (n_max < 2) return out;
  struct Part {
    std::vector<MonotonicityRow> rows;
    std::vector<ViolationReport> decreases;
  };
  auto parts = parallel_map(ul(n_max - 1), workers, [&](size_t i) {
    const long n = static_cast<long>(i) + 2;
    Part part;
    Rational prev = tilde_p(SmallDevSpec(c, 1, n));
    for (long b = 1; b < n; ++b) {
      const Rational next = tilde_p(SmallDevSpec(c, b + 1, n));
      const Sign s = sign_of(Rational(next - prev));
      part.rows.push_back(MonotonicityRow{b, n, s});
      if (s != Sign::Positive) part.decreases.push_back(ViolationReport::make("tilde_p_increasing", b, n, prev, next));
      prev = next;
    }
    return part;
  });
  for (auto& part : parts) {
    out.rows.insert(out.rows.end(), part.rows.begin(), part.rows.end());
    out.decreases.insert(out.decreases.end(), part.decreases.begin(), part.decreases.end());
  }
  return out;
}

}  // namespace rambin
