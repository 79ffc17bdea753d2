#include "rambin/exactcore.hpp"

#include "rambin/parallel.hpp"

#include <algorithm>
#include <string>

namespace rambin {

namespace {

// Scaled pmf terms n^n P(xi_{b,n} = i) for i = 0..last, via
// t_{i+1} = t_i (n - i) b / ((i + 1)(n - b)); every division is exact.
std::vector<BigInt> scaled_terms(long b, long n, long last) {
  std::vector<BigInt> t(static_cast<size_t>(last + 1));
  if (b == n) {
    for (long i = 0; i <= last; ++i) t[static_cast<size_t>(i)] = (i == n) ? ipow(n, n) : 0;
    return t;
  }
  const auto nb = static_cast<unsigned long>(n - b);
  t[0] = ipow(static_cast<long>(nb), static_cast<unsigned long>(n));
  for (long i = 0; i < last; ++i) {
    BigInt next = t[static_cast<size_t>(i)] * static_cast<unsigned long>(n - i);
    next *= static_cast<unsigned long>(b);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(i + 1) * nb);
    t[static_cast<size_t>(i + 1)] = std::move(next);
  }
  return t;
}

Rational z_from_scaled(const BigInt& below, const BigInt& at, const BigInt& scale) {
  return make_rational(scale - 2 * below, 2 * at);
}

void require_pair(long b, long n) {
  if (b < 1 || b >= n) {
    throw DomainError("need 1 <= b < n (b=" + std::to_string(b) + ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

BinomialSpec::BinomialSpec(long b_, long n_) : b(b_), n(n_) {
  if (b < 1 || b > n) {
    throw DomainError("binomial spec needs 1 <= b <= n (b=" + std::to_string(b) +
                      ", n=" + std::to_string(n) + ")");
  }
}

Rational exact_pmf(const BinomialSpec& spec, long i) {
  if (i < 0 || i > spec.n) throw DomainError("pmf index out of range");
  BigInt num = binomial(static_cast<unsigned long>(spec.n), static_cast<unsigned long>(i)) *
               ipow(spec.b, static_cast<unsigned long>(i)) *
               ipow(spec.n - spec.b, static_cast<unsigned long>(spec.n - i));
  return make_rational(num, ipow(spec.n, static_cast<unsigned long>(spec.n)));
}

ScaledTail scaled_tail(const BinomialSpec& spec) {
  auto t = scaled_terms(spec.b, spec.n, spec.b);
  ScaledTail out{0, t[static_cast<size_t>(spec.b)], ipow(spec.n, static_cast<unsigned long>(spec.n))};
  for (long i = 0; i < spec.b; ++i) out.below += t[static_cast<size_t>(i)];
  return out;
}

Rational tail_p(const BinomialSpec& spec) {
  auto s = scaled_tail(spec);
  return make_rational(s.below, s.scale);
}

Rational ramanujan_z(const BinomialSpec& spec) {
  auto s = scaled_tail(spec);
  return z_from_scaled(s.below, s.at_b, s.scale);
}

TailValue tail_value(const BinomialSpec& spec) {
  auto s = scaled_tail(spec);
  return TailValue{spec, make_rational(s.below, s.scale), make_rational(s.at_b, s.scale),
                   z_from_scaled(s.below, s.at_b, s.scale)};
}

long median_binomial(const BinomialSpec& spec) {
  auto t = scaled_terms(spec.b, spec.n, spec.n);
  const BigInt scale = ipow(spec.n, static_cast<unsigned long>(spec.n));
  BigInt cdf = 0;
  for (long m = 0; m <= spec.n; ++m) {
    cdf += t[static_cast<size_t>(m)];
    if (2 * cdf >= scale) return m;
  }
  return spec.n;
}

Sign p_diff_sign(long b, long n) {
  require_pair(b, n);
  // Both tails share the n^n scale, so the sign is an integer comparison.
  auto lower = scaled_tail(BinomialSpec(b, n));
  auto upper = scaled_tail(BinomialSpec(b + 1, n));
  return sign_of(cmp(upper.below, lower.below));
}

Sign z_diff_sign_exact(long b, long n) {
  require_pair(b, n);
  return sign_of(ramanujan_z(BinomialSpec(b + 1, n)) - ramanujan_z(BinomialSpec(b, n)));
}

bool z_symmetry_check(long b, long n) {
  require_pair(b, n);
  return ramanujan_z(BinomialSpec(b, n)) + ramanujan_z(BinomialSpec(n - b, n)) == 1;
}

TailTable::TailTable(long n, long b_limit)
    : n_(n), scale_(ipow(n, static_cast<unsigned long>(n))) {
  if (n < 1) throw DomainError("tail table needs n >= 1");
  const long top = b_limit >= 1 ? std::min(b_limit, n) : n;
  below_.resize(static_cast<size_t>(top + 1));
  at_.resize(static_cast<size_t>(top + 1));
  for (long b = 1; b <= top; ++b) {
    auto t = scaled_terms(b, n, b);
    BigInt sum = 0;
    for (long i = 0; i < b; ++i) sum += t[static_cast<size_t>(i)];
    below_[static_cast<size_t>(b)] = std::move(sum);
    at_[static_cast<size_t>(b)] = std::move(t[static_cast<size_t>(b)]);
  }
}

Rational TailTable::p(long b) const { return make_rational(below(b), scale_); }

Rational TailTable::z(long b) const { return z_from_scaled(below(b), at(b), scale_); }

std::vector<PSignRow> theorem3_scan(long n_max, int workers) {
  if (n_max < 2) return {};
  auto parts = parallel_map(static_cast<size_t>(n_max - 1), workers, [](size_t idx) {
    const long n = static_cast<long>(idx) + 2;
    TailTable table(n);
    std::vector<PSignRow> rows;
    for (long b = 1; b < n; ++b) {
      Sign s = sign_of(cmp(table.below(b + 1), table.below(b)));
      bool expect_up = n >= 3 * b + 2;
      bool ok = expect_up ? s == Sign::Positive : s == Sign::Negative;
      rows.push_back(PSignRow{b, n, s, ok});
    }
    return rows;
  });
  return flatten(std::move(parts));
}

std::vector<ViolationReport> theorem3_violations(const std::vector<PSignRow>& rows) {
  std::vector<ViolationReport> out;
  for (const auto& r : rows) {
    if (r.boundary_ok) continue;
    out.push_back(ViolationReport::make("thm3", r.b, r.n, tail_p(BinomialSpec(r.b + 1, r.n)),
                                        tail_p(BinomialSpec(r.b, r.n))));
  }
  return out;
}

std::vector<ViolationReport> theorem1_scan(long b_max, long n_max, int workers) {
  if (b_max < 1 || n_max < 1) return {};
  // z values for every n and b <= min(b_max, n).
  auto zs = parallel_map(static_cast<size_t>(n_max), workers, [b_max](size_t idx) {
    const long n = static_cast<long>(idx) + 1;
    TailTable table(n, b_max);
    std::vector<Rational> z(static_cast<size_t>(std::min(b_max, n) + 1));
    for (long b = 1; b <= std::min(b_max, n); ++b) z[static_cast<size_t>(b)] = table.z(b);
    return z;
  });
  auto z_at = [&](long b, long n) -> const Rational& {
    return zs[static_cast<size_t>(n - 1)][static_cast<size_t>(b)];
  };

  const Rational third(1, 3), half(1, 2), two_thirds(2, 3);
  std::vector<ViolationReport> out;
  for (long n = 1; n <= n_max; ++n) {
    for (long b = 1; b <= std::min(b_max, n); ++b) {
      const Rational& z = z_at(b, n);
      if (n > 2 * b) {
        if (!(z > third)) out.push_back(ViolationReport::make("thm1-above-third", b, n, z, third));
        if (!(z < half)) out.push_back(ViolationReport::make("thm1-below-half", b, n, z, half));
      } else if (n > b && n < 2 * b) {
        if (!(z > half)) out.push_back(ViolationReport::make("thm1-above-half", b, n, z, half));
        if (!(z < two_thirds)) {
          out.push_back(ViolationReport::make("thm1-below-two-thirds", b, n, z, two_thirds));
        }
      } else if (z != half) {
        // n == b or n == 2b
        out.push_back(ViolationReport::make("thm1-anchor", b, n, z, half));
      }
      if (n >= 2 * b) {
        if (!(z >= third)) {
          out.push_back(ViolationReport::make("eq-gz_integral_lowerbound", b, n, z, third));
        }
        if (n + 1 <= n_max && !(z_at(b, n + 1) < z)) {
          out.push_back(ViolationReport::make("thm1-decreasing", b, n, z_at(b, n + 1), z));
        }
      }
    }
  }
  return out;
}

std::vector<ViolationReport> symmetry_scan(long n_max, int workers) {
  if (n_max < 2) return {};
  auto parts = parallel_map(static_cast<size_t>(n_max - 1), workers, [](size_t idx) {
    const long n = static_cast<long>(idx) + 2;
    TailTable table(n);
    std::vector<ViolationReport> out;
    for (long b = 1; b < n; ++b) {
      Rational sum = table.z(b) + table.z(n - b);
      if (sum != 1) out.push_back(ViolationReport::make("sym-z", b, n, sum, Rational(1)));
    }
    return out;
  });
  return flatten(std::move(parts));
}

}  // namespace rambin
