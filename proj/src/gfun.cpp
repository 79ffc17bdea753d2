#include "rambin/gfun.hpp"

#include <algorithm>
#include <string>

namespace rambin {

namespace {

unsigned long ul(long v) { return static_cast<unsigned long>(v); }

// a (a-1) ... (a-k+1)
BigInt falling(long a, long k) {
  BigInt r = 1;
  for (long j = 0; j < k; ++j) r *= a - j;
  return r;
}

void require_unit(const Rational& z) {
  if (z < 0 || z > 1) throw DomainError("z must lie in [0, 1]");
}

// (1 - z)^m expanded as integer coefficients.
std::vector<BigInt> one_minus_z_pow(long m) {
  std::vector<BigInt> c(ul(m + 1));
  for (long j = 0; j <= m; ++j) {
    c[ul(j)] = binomial(ul(m), ul(j));
    if (j % 2) c[ul(j)] = -c[ul(j)];
  }
  return c;
}

// Weights K_i of the closed-form sum, paired with the sign (-1)^{l-i}.
BigInt closed_form_weight(const BinomialSpec& s, long l, long i) {
  return binomial(ul(l), ul(i)) * falling(s.n - 1 - i, l - i) * falling(s.n - s.b, i);
}

void require_closed_form_range(const BinomialSpec& s, long l) {
  if (l < 0 || l > std::min(s.b - 1, s.n - s.b)) {
    throw DomainError("derivative order " + std::to_string(l) + " outside [0, min(b-1, n-b)]");
  }
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients, BigInt scale)
    : coeffs_(std::move(coefficients)), scale_(std::move(scale)) {
  if (scale_ <= 0) throw DomainError("polynomial scale must be positive");
  trim();
}

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long IntegerPolynomial::degree() const { return static_cast<long>(coeffs_.size()) - 1; }

Rational IntegerPolynomial::evaluate(const Rational& z) const {
  // Horner over the common denominator den(z)^degree.
  if (coeffs_.empty()) return 0;
  const BigInt& p = z.get_num();
  const BigInt& q = z.get_den();
  BigInt acc = 0;
  BigInt qpow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * p + *it * qpow;
    qpow *= q;
  }
  // acc = sum c_k p^k q^{deg-k}; qpow = q^{deg+1}.
  return make_rational(acc * q, qpow * scale_);
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntegerPolynomial({}, scale_);
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntegerPolynomial(std::move(d), scale_);
}

bool IntegerPolynomial::operator==(const IntegerPolynomial& other) const {
  if (coeffs_.size() != other.coeffs_.size()) return false;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] * other.scale_ != other.coeffs_[k] * scale_) return false;
  }
  return true;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return IntegerPolynomial({}, a.scale_ * b.scale_);
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntegerPolynomial(std::move(c), a.scale_ * b.scale_);
}

DeltaInterval delta_interval(const BinomialSpec& spec) {
  return DeltaInterval{1 - make_rational(spec.b + 1, spec.n), 1 - make_rational(spec.b, spec.n)};
}

Rational eval_g(const BinomialSpec& spec, const Rational& z) {
  require_unit(z);
  return rpow(1 - z, ul(spec.b - 1)) * rpow(z, ul(spec.n - spec.b));
}

Rational derivative_closed_form(const BinomialSpec& spec, long l, const Rational& z) {
  require_closed_form_range(spec, l);
  require_unit(z);
  Rational sum = 0;
  for (long i = 0; i <= l; ++i) {
    Rational term = closed_form_weight(spec, l, i) * rpow(z, ul(l - i));
    if ((l - i) % 2) term = -term;
    sum += term;
  }
  return rpow(1 - z, ul(spec.b - 1 - l)) * rpow(z, ul(spec.n - spec.b - l)) * sum;
}

IntegerPolynomial derivative_closed_form_poly(const BinomialSpec& spec, long l) {
  require_closed_form_range(spec, l);
  // z^{n-b-l} * sum_i (-1)^{l-i} K_i z^{l-i}
  std::vector<BigInt> tail(ul(spec.n - spec.b + 1));
  for (long i = 0; i <= l; ++i) {
    BigInt w = closed_form_weight(spec, l, i);
    if ((l - i) % 2) w = -w;
    tail[ul(spec.n - spec.b - l + l - i)] += w;
  }
  return IntegerPolynomial(one_minus_z_pow(spec.b - 1 - l)) * IntegerPolynomial(std::move(tail));
}

IntegerPolynomial derivative_oracle(const BinomialSpec& spec, long l) {
  if (l < 0) throw DomainError("derivative order must be non-negative");
  if (spec.n > kOracleMaxN) {
    throw ResourceError("derivative oracle limited to n <= " + std::to_string(kOracleMaxN));
  }
  std::vector<BigInt> c(ul(spec.n));
  auto base = one_minus_z_pow(spec.b - 1);
  for (long j = 0; j < spec.b; ++j) c[ul(spec.n - spec.b + j)] = base[ul(j)];
  IntegerPolynomial p(std::move(c));
  for (long k = 0; k < l; ++k) p = p.derivative();
  return p;
}

Rational fourth_derivative(const BinomialSpec& spec, const Rational& z) {
  if (4 <= std::min(spec.b - 1, spec.n - spec.b)) return derivative_closed_form(spec, 4, z);
  require_unit(z);
  return derivative_oracle(spec, 4).evaluate(z);
}

Rational integrate_g(const BinomialSpec& spec, const Rational& lo, const Rational& hi) {
  // Antiderivative sum_j C(b-1,j) (-1)^j z^{m_j} / m_j, m_j = n - b + 1 + j,
  // evaluated over the common denominator den(z)^n * lcm(m_j).
  const long m0 = spec.n - spec.b + 1;
  BigInt lcm = 1;
  for (long m = m0; m <= spec.n; ++m) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), ul(m));
  auto antiderivative = [&](const Rational& z) {
    const BigInt& p = z.get_num();
    const BigInt& q = z.get_den();
    BigInt ppow = ipow(p, ul(m0));
    BigInt acc = 0;
    std::vector<BigInt> qpows(ul(spec.b));
    // qpows[j] = q^{n - m_j}
    qpows[ul(spec.b - 1)] = 1;
    for (long j = spec.b - 2; j >= 0; --j) qpows[ul(j)] = qpows[ul(j + 1)] * q;
    for (long j = 0; j < spec.b; ++j) {
      BigInt term = binomial(ul(spec.b - 1), ul(j)) * ppow * qpows[ul(j)] * (lcm / (m0 + j));
      if (j % 2) term = -term;
      acc += term;
      ppow *= p;
    }
    return make_rational(acc, ipow(q, ul(spec.n)) * lcm);
  };
  return antiderivative(hi) - antiderivative(lo);
}

Rational integrate_g_delta(const BinomialSpec& spec) {
  if (spec.b >= spec.n) throw DomainError("Delta_{b,n} is degenerate for b = n");
  auto d = delta_interval(spec);
  return integrate_g(spec, d.lo, d.hi);
}

Rational TaylorSandwich::cubic(const Rational& z) const {
  const Rational h = z - delta.lo;
  Rational sum = 0;
  Rational hp = 1;
  long fact = 1;
  for (long l = 0; l < 4; ++l) {
    if (l > 0) fact *= l;
    sum += derivatives_at_lo[ul(l)] * hp / fact;
    hp *= h;
  }
  return sum;
}

Rational TaylorSandwich::lower(const Rational& z) const {
  return cubic(z) + rpow(z - delta.lo, 4) * d4_minus / 24;
}

Rational TaylorSandwich::upper(const Rational& z) const {
  return cubic(z) + rpow(z - delta.lo, 4) * d4_plus / 24;
}

TaylorSandwich taylor_sandwich(const BinomialSpec& spec) {
  if (spec.b < 5 || 2 * spec.b > spec.n) throw DomainError("Taylor sandwich needs 5 <= b <= n/2");
  auto d = delta_interval(spec);
  TaylorSandwich s{spec, d, {}, 0, 0};
  for (long l = 0; l < 4; ++l) s.derivatives_at_lo[ul(l)] = derivative_closed_form(spec, l, d.lo);
  s.d4_minus = derivative_closed_form(spec, 4, d.lo);
  s.d4_plus = derivative_closed_form(spec, 4, d.hi);
  return s;
}

std::vector<Rational> sandwich_grid(const BinomialSpec& spec, int points) {
  if (points < 2) throw DomainError("sandwich grid needs at least 2 points");
  auto d = delta_interval(spec);
  std::vector<Rational> grid;
  for (int k = 0; k < points; ++k) {
    grid.push_back(d.lo + (d.hi - d.lo) * make_rational(k, points - 1));
  }
  return grid;
}

PSplit split_P(const BigInt& b, const BigInt& n) {
  const BigInt b2 = b * b, b3 = b2 * b, b4 = b3 * b, b5 = b4 * b, n2 = n * n;
  BigInt leading = 12 * b5 - 16 * b4 * n + 64 * b4 + 4 * b3 * n2 - 71 * b3 * n + 138 * b3 +
                   16 * b2 * n2 - 112 * b2 * n;
  return PSplit{leading, eval_R(b, n)};
}

BigInt eval_R(const BigInt& b, const BigInt& n) {
  const BigInt n2 = n * n;
  return 156 * b * b + 12 * b * n2 - 105 * b * n + 94 * b + 24 * n2 - 48 * n + 24;
}

BigInt eval_P(const BigInt& b, const BigInt& n) {
  auto s = split_P(b, n);
  return s.leading + s.remainder;
}

Rational eval_Q(const BinomialSpec& spec) {
  if (spec.b > spec.n - 2) throw DomainError("Q_{b,n} needs b <= n - 2");
  const Rational x = make_rational(spec.b + 1, spec.n);
  const Rational y = 1 - x;
  const long m = spec.n - spec.b - 1;
  return 3 * m * m * x * x - 2 * m * x * (23 * y * y + 7 * y - 1) + 96 * y * y * y +
         24 * y * y * y * y;
}

Rational q_lower_bound(const BinomialSpec& spec) {
  const Rational x = make_rational(spec.b + 1, spec.n);
  const Rational y = 1 - x;
  const long b = spec.b, n = spec.n;
  return x * y * y * (3 * b * n + 46 * b - 57 * n + 46);
}

Claim1Result verify_claim1_detail(const BinomialSpec& spec) {
  const long b = spec.b, n = spec.n;
  if (b >= n) throw DomainError("Claim 1 identities need b < n");
  Claim1Result r;
  const Rational full = integrate_g(spec, 0, 1);
  const Rational split = 1 - make_rational(b, n);
  const Rational left = integrate_g(spec, 0, split);
  const Rational right = integrate_g(spec, split, 1);

  TailValue tv = tail_value(spec);
  r.beta_ratio = tv.p == left / full;

  TailValue next = tail_value(BinomialSpec(b + 1, n));
  const Rational x = make_rational(b + 1, n);
  const Rational g_delta = integrate_g_delta(spec);
  const Rational corner = rpow(x, ul(b)) * rpow(1 - x, ul(n - b));
  r.p_difference = next.p - tv.p == (corner - b * g_delta) / (b * full);

  const Rational base = rpow(make_rational(b, n), ul(b)) * rpow(split, ul(n - b));
  r.z_integral = tv.z == make_rational(b, 2) * (right - left) / base;

  const Rational split1 = 1 - x;
  const Rational right1 = integrate_g(spec, split1, 1);
  const Rational left1 = integrate_g(spec, 0, split1);
  const Rational nb1 = make_rational(n - b - 1, n);
  const Rational prefactor =
      make_rational(ipow(n, ul(n)),
                    2 * BigInt(n - b) * ipow(b + 1, ul(b)) * ipow(n - b - 1, ul(n - b - 1)));
  const Rational ratio = rpow(1 + make_rational(1, b), ul(b)) *
                         rpow(1 - make_rational(1, n - b), ul(n - b - 1));
  const Rational bracket =
      -2 * rpow(x, ul(b)) * rpow(nb1, ul(n - b)) + b * (right1 - left1) - b * ratio * (right - left);
  r.z_difference = next.z - tv.z == prefactor * bracket;
  return r;
}

bool verify_claim1(const BinomialSpec& spec) { return verify_claim1_detail(spec).all(); }

bool verify_claim2(const BinomialSpec& spec) {
  const long top = std::min(spec.b - 1, spec.n - spec.b);
  for (long l = 1; l <= top; ++l) {
    if (!(derivative_closed_form_poly(spec, l) == derivative_oracle(spec, l))) return false;
  }
  return true;
}

std::vector<ViolationReport> verify_claim3(const BinomialSpec& spec, int points) {
  const TaylorSandwich s = taylor_sandwich(spec);
  std::vector<ViolationReport> out;
  for (const auto& z : sandwich_grid(spec, points)) {
    const Rational g = eval_g(spec, z);
    const Rational lo = s.lower(z);
    const Rational hi = s.upper(z);
    if (lo > g) out.push_back(ViolationReport::make("claim3-lower", spec.b, spec.n, lo, g));
    if (g > hi) out.push_back(ViolationReport::make("claim3-upper", spec.b, spec.n, g, hi));
  }
  return out;
}

}  // namespace rambin
