#include "rambin/certificates.hpp"

#include "rambin/exactcore.hpp"
#include "rambin/gfun.hpp"
#include "rambin/parallel.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace rambin {

namespace {

unsigned long ul(long v) { return static_cast<unsigned long>(v); }

// Dense univariate polynomials, ascending coefficients.
using Poly = std::vector<BigInt>;

Poly pmul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Poly psub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

Poly pscale(Poly a, const BigInt& k) {
  for (auto& c : a) c *= k;
  return a;
}

BigInt peval(const Poly& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// q(t) = p(t + a)
Poly taylor_shift(const Poly& p, const BigInt& a) {
  Poly q;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    // q <- q * (t + a) + c
    Poly next(q.size() + 1);
    for (size_t i = 0; i < q.size(); ++i) {
      next[i + 1] += q[i];
      next[i] += q[i] * a;
    }
    next[0] += *it;
    q = std::move(next);
  }
  return q;
}

// Positive for every t >= 0: constant > 0, the rest >= 0.
bool positive_on_half_line(const Poly& q) {
  if (q.empty() || q[0] <= 0) return false;
  return std::all_of(q.begin() + 1, q.end(), [](const BigInt& c) { return c >= 0; });
}

// P_{b,n} as a polynomial in n.
Poly p_in_n(long b_) {
  const BigInt b = b_;
  const BigInt b2 = b * b, b3 = b2 * b, b4 = b3 * b, b5 = b4 * b;
  return Poly{12 * b5 + 64 * b4 + 138 * b3 + 156 * b2 + 94 * b + 24,
              -(16 * b4 + 71 * b3 + 112 * b2 + 105 * b + 48), 4 * b3 + 16 * b2 + 12 * b + 24};
}

std::string range_text(const char* fmt_a, long a, const char* fmt_b, long b2) {
  return std::string(fmt_a) + std::to_string(a) + fmt_b + std::to_string(b2);
}

InequalityCertificate start(std::string id, std::string range) {
  InequalityCertificate c;
  c.claim_id = std::move(id);
  c.range = std::move(range);
  return c;
}

IntervalValue pt(const Rational& v) { return IntervalValue::point(v); }

IntervalValue e_enclosure(const PrecisionPolicy& policy) {
  const unsigned long bits = policy.bits() + 16;
  return exp_pos_enclosure(1, series_terms_for_bits(bits), bits);
}

}  // namespace

RangeSpec RangeSpec::small_band(long b_lo, long b_hi, long n_hi) {
  RangeSpec r;
  r.b_lo = b_lo;
  r.b_hi = b_hi;
  r.band = Band::SmallB;
  r.n_hi = n_hi;
  return r;
}

RangeSpec RangeSpec::medium_band(long b_lo, long b_hi) {
  RangeSpec r;
  r.b_lo = b_lo;
  r.b_hi = b_hi;
  r.band = Band::MediumB;
  return r;
}

RangeSpec RangeSpec::explicit_points(std::vector<std::pair<long, long>> pts) {
  RangeSpec r;
  r.band = Band::Explicit;
  r.points = std::move(pts);
  if (!r.points.empty()) {
    r.b_lo = r.points.front().first;
    r.b_hi = r.b_lo;
    for (auto& [b, n] : r.points) {
      r.b_lo = std::min(r.b_lo, b);
      r.b_hi = std::max(r.b_hi, b);
    }
  }
  return r;
}

std::vector<std::pair<long, long>> RangeSpec::enumerate() const {
  std::vector<std::pair<long, long>> out;
  switch (band) {
    case Band::SmallB:
      for (long b = b_lo; b <= b_hi; ++b) {
        for (long n = 3 * b + 2; n <= n_hi; ++n) out.emplace_back(b, n);
      }
      break;
    case Band::MediumB:
      for (long b = b_lo; b <= b_hi; ++b) {
        for (long n = 2 * b; n <= 3 * b + 1; ++n) out.emplace_back(b, n);
      }
      break;
    case Band::Explicit:
      out = points;
      break;
  }
  if (out.empty()) throw DomainError("range is empty: " + describe());
  for (auto& [b, n] : out) {
    if (b < 1 || b >= n) throw DomainError("range point needs 1 <= b < n");
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return std::pair(x.second, x.first) < std::pair(y.second, y.first); });
  return out;
}

std::string RangeSpec::describe() const {
  switch (band) {
    case Band::SmallB:
      return std::to_string(b_lo) + "<=b<=" + std::to_string(b_hi) + ", 3b+2<=n<=" + std::to_string(n_hi);
    case Band::MediumB:
      return std::to_string(b_lo) + "<=b<=" + std::to_string(b_hi) + ", 2b<=n<=3b+1";
    case Band::Explicit:
      return std::to_string(points.size()) + " explicit points";
  }
  return {};
}

const char* cert_status_name(CertStatus s) {
  switch (s) {
    case CertStatus::Verified: return "verified";
    case CertStatus::Violated: return "violated";
    default: return "inconclusive";
  }
}

void InequalityCertificate::finalize() {
  std::sort(witnesses.begin(), witnesses.end(), report_order);
  if (!witnesses.empty()) {
    status = CertStatus::Violated;
  } else if (inconclusive_points > 0) {
    status = CertStatus::Inconclusive;
  } else {
    status = CertStatus::Verified;
  }
}

Rational a_bn(long b, long n) { return (n - b) * rpow(make_rational(b + 1, n), 5); }

Rational u_bn(long b, long n) {
  const long bt = n - b - 1;
  const Rational r = make_rational(n - bt, n - bt - 1);
  return 1 + r - rpow(make_rational(bt, bt + 1), ul(bt)) * rpow(r, ul(n - bt));
}

Rational b_bn(long b, long n) {
  return rpow(1 - make_rational(1, b + 1), ul(b)) * rpow(1 + make_rational(1, n - b - 1), ul(n - b - 1)) - 1;
}

// --- (small_b_ineq) --------------------------------------------------------

InequalityCertificate check_small_b(const RangeSpec& range, int workers) {
  InequalityCertificate cert = start("eq-small_b_ineq", range.describe());
  auto pts = range.enumerate();
  for (auto& [b, n] : pts) {
    if (b < 6 || 3 * b + 2 > n) throw DomainError("small_b_ineq range needs 6 <= b <= (n-2)/3");
  }
  auto parts = parallel_map(pts.size(), workers, [&](size_t i) {
    const auto [b, n] = pts[i];
    const BinomialSpec spec(b, n);
    const Rational x = make_rational(b + 1, n);
    const Rational lhs = eval_P(b, n);
    const Rational rhs = Rational(b * n) * fourth_derivative(spec, 1 - make_rational(b, n)) /
                         (5 * rpow(x, ul(b - 4)) * rpow(1 - x, ul(n - b - 2)));
    std::vector<ViolationReport> w;
    if (!(lhs > rhs)) w.push_back(ViolationReport::make("eq-small_b_ineq", b, n, lhs, rhs));
    return w;
  });
  cert.witnesses = flatten(std::move(parts));
  cert.points_checked = static_cast<long>(pts.size());
  cert.finalize();
  return cert;
}

InequalityCertificate check_small_b_sufficient(long b_lo, long b_hi, int workers) {
  InequalityCertificate cert = start("eq-small_b_ineq-sufficient",
                             range_text("", b_lo, "<=b<=", b_hi) + ", all real n>=n0(b)");
  if (b_lo < 1 || b_hi < b_lo) throw DomainError("empty b range");
  auto parts = parallel_map(ul(b_hi - b_lo + 1), workers, [&](size_t i) {
    const long b = b_lo + static_cast<long>(i);
    const BigInt bb = b;
    const Poly nb1_sq = pmul(Poly{-(bb + 1), 1}, Poly{-(bb + 1), 1});
    const Poly lhs = pscale(pmul(nb1_sq, p_in_n(b)), 5 * (bb + 1) * (bb + 1));
    const Poly nb_sq = pmul(Poly{-bb, 1}, Poly{-bb, 1});
    const Poly rhs = pscale(pmul(Poly{0, 0, 1}, nb_sq), 3 * bb * (bb + 13) * (bb * bb + 8));
    const long n = small_b_sufficient_start(b);
    const Poly shifted = taylor_shift(psub(lhs, rhs), n);
    std::vector<ViolationReport> w;
    if (!positive_on_half_line(shifted)) {
      w.push_back(ViolationReport::make("eq-small_b_ineq-sufficient", b, n, Rational(peval(lhs, n)),
                                        Rational(peval(rhs, n))));
    }
    return w;
  });
  cert.witnesses = flatten(std::move(parts));
  cert.points_checked = b_hi - b_lo + 1;
  cert.finalize();
  return cert;
}

long small_b_sufficient_start(long b) { return b >= 39 ? 3 * b + 2 : std::max(3 * b + 2, 158L); }

InequalityCertificate check_r_positive(long n_max) {
  InequalityCertificate cert = start("eq-small_b_ineq-R", "6<=b<=(n-2)/3, n<=" + std::to_string(n_max));
  for (long n = 20; n <= n_max; ++n) {
    for (long b = 6; 3 * b + 2 <= n; ++b) {
      ++cert.points_checked;
      const BigInt r = eval_R(BigInt(b), BigInt(n));
      if (r <= 0) cert.witnesses.push_back(ViolationReport::make("eq-small_b_ineq-R", b, n, Rational(r), Rational(0)));
    }
  }
  cert.finalize();
  return cert;
}

// --- (negativeness) / (medium_b_ineq) ---------------------------------------

InequalityCertificate check_medium(const RangeSpec& range, int workers) {
  InequalityCertificate cert = start("eq-negativeness", range.describe());
  auto pts = range.enumerate();
  for (auto& [b, n] : pts) {
    if (b < 5 || n < 2 * b || n > 3 * b + 1) throw DomainError("negativeness range needs 2b <= n <= 3b+1, b >= 5");
  }
  auto parts = parallel_map(pts.size(), workers, [&](size_t i) {
    const auto [b, n] = pts[i];
    const BinomialSpec spec(b, n);
    const Rational x = make_rational(b + 1, n);
    const Rational y = 1 - x;
    const Rational first = rpow(x, ul(b - 4)) * rpow(y, ul(n - b - 2)) * Rational(eval_P(b, n)) /
                           (24 * Rational(ipow(n, 6)));
    const Rational second = make_rational(BigInt(b), 120 * ipow(n, 5)) * fourth_derivative(spec, y);
    std::vector<ViolationReport> w;
    if (!(first - second < 0)) w.push_back(ViolationReport::make("eq-negativeness", b, n, first - second, 0));
    return w;
  });
  cert.witnesses = flatten(std::move(parts));
  cert.points_checked = static_cast<long>(pts.size());
  cert.finalize();
  return cert;
}

InequalityCertificate check_medium_polynomial(long b_lo, long b_hi) {
  InequalityCertificate cert = start("eq-medium_b_ineq", range_text("", b_lo, "<=b<=", b_hi) + ", real 2b<=n<=3b+1");
  for (long b = b_lo; b <= b_hi; ++b) {
    const BigInt bb = b;
    // 5P - bn(3bn + 46b - 57n), leading coefficient 20b^3 + 77b^2 + 117b + 120 > 0
    Poly d = pscale(p_in_n(b), 5);
    d[2] -= 3 * bb * bb - 57 * bb;
    d[1] -= 46 * bb * bb;
    ++cert.points_checked;
    if (d[2] <= 0) {
      cert.notes.push_back("b=" + std::to_string(b) + ": not convex in n");
      ++cert.inconclusive_points;
      continue;
    }
    for (long n : {2 * b, 3 * b + 1}) {
      const BigInt v = peval(d, n);
      if (v >= 0) {
        cert.witnesses.push_back(ViolationReport::make(
            "eq-medium_b_ineq", b, n, 5 * Rational(eval_P(b, n)), Rational(bb * n * (3 * bb * n + 46 * bb - 57 * n))));
      }
    }
  }
  cert.finalize();
  return cert;
}

// --- (above_n_over_2_b_ineq) -------------------------------------------------

InequalityCertificate check_above_half(long bt_lo, long bt_hi) {
  InequalityCertificate cert = start("eq-above_n_over_2_b_ineq", range_text("", bt_lo, "<=bt<=", bt_hi));
  for (long bt = bt_lo; bt <= bt_hi; ++bt) {
    const BigInt t = bt + 1;
    const BigInt t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    const BigInt a = -40 * t3 + 27 * t2 + 3 * t + 70;
    const BigInt bq = 100 * t4 - 35 * t3 - 21 * t2 - 78 * t - 26;
    const BigInt c = -60 * t5 + 80 * t4 + 10 * t3 + 30 * t2;
    const BigInt root_test = 9 * a * bt * bt + 3 * BigInt(bt) * bq + c;
    const BigInt slope = 6 * a * bt + bq;
    ++cert.points_checked;
    if (!(root_test < 0)) {
      cert.witnesses.push_back(ViolationReport::make("eq-above_n_over_2_b_ineq", bt, 3 * bt, Rational(root_test), 0));
    }
    if (!(a < 0) || slope > 0) {
      cert.witnesses.push_back(
          ViolationReport::make("eq-above_n_over_2_b_ineq-shape", bt, 3 * bt, Rational(a), Rational(slope)));
    }
  }
  cert.finalize();
  return cert;
}

Rational above_half_bracket(long bt, long n) {
  if (bt < 1 || n - bt - 1 < 1) throw DomainError("above_half_bracket needs 1 <= bt <= n - 2");
  const Rational x = make_rational(bt + 1, n);
  const Rational y = 1 - x;
  const Rational r = make_rational(n - bt, n - bt - 1);
  const Rational p_term = Rational(eval_P(bt, n)) / (24 * Rational(ipow(n, 6)));
  const Rational q_term =
      make_rational(BigInt(bt), 120 * ipow(n, 5)) * (3 * bt * n + 46 * bt - 57 * n + 46);
  const Rational u_term =
      (r - rpow(make_rational(bt, bt + 1), ul(bt)) * rpow(r, ul(n - bt))) * rpow(x, 4) * y * y;
  return p_term - q_term + u_term;
}

InequalityCertificate check_above_half_direct(long n_hi, int workers) {
  InequalityCertificate cert = start("eq-above_n_over_2_b_ineq-direct", "5<=bt, 2bt<=n<=" + std::to_string(n_hi));
  std::vector<std::pair<long, long>> pts;
  for (long n = 10; n <= n_hi; ++n) {
    for (long bt = 5; 2 * bt <= n; ++bt) pts.emplace_back(bt, n);
  }
  auto parts = parallel_map(pts.size(), workers, [&](size_t i) {
    const auto [bt, n] = pts[i];
    const Rational v = above_half_bracket(bt, n);
    std::vector<ViolationReport> w;
    if (!(v < 0)) w.push_back(ViolationReport::make("eq-above_n_over_2_b_ineq-direct", bt, n, v, 0));
    return w;
  });
  cert.witnesses = flatten(std::move(parts));
  cert.points_checked = static_cast<long>(pts.size());
  cert.finalize();
  return cert;
}

// --- exp bounds ---------------------------------------------------------------

namespace {

// j^j and (j+1)^j for j = 0..top.
struct PowerTables {
  std::vector<BigInt> self;  // j^j
  std::vector<BigInt> next;  // (j+1)^j
  explicit PowerTables(long top) : self(ul(top + 1)), next(ul(top + 1)) {
    for (long j = 0; j <= top; ++j) {
      self[ul(j)] = ipow(BigInt(j), ul(j));
      next[ul(j)] = ipow(BigInt(j + 1), ul(j));
    }
  }
};

// Sign of A_j - A_k with A_j = (1 + 1/j)^j, by cross multiplication.
Sign compare_a(const PowerTables& t, long j, long k) {
  return sign_of(cmp(t.next[ul(j)] * t.self[ul(k)], t.next[ul(k)] * t.self[ul(j)]));
}

}  // namespace

Sign exp_bound_first_sign(long b, long n) {
  // (1+1/b)^b (1-1/m)^{m-1} - 1, m = n - b: sign of (b+1)^b (m-1)^{m-1} - b^b m^{m-1}.
  const long m = n - b;
  if (b < 1 || m < 2) throw DomainError("first exp bound needs b >= 1 and n - b >= 2");
  return sign_of(cmp(ipow(BigInt(b + 1), ul(b)) * ipow(BigInt(m - 1), ul(m - 1)),
                     ipow(BigInt(b), ul(b)) * ipow(BigInt(m), ul(m - 1))));
}

Sign exp_bound_second_sign(long b, long n) {
  // (b/(b+1))^b ((k+1)/k)^k - 1, k = n - b - 1: sign of b^b (k+1)^k - (b+1)^b k^k.
  const long k = n - b - 1;
  if (b < 1 || k < 1) throw DomainError("second exp bound needs b <= n - 2");
  return sign_of(cmp(ipow(BigInt(b), ul(b)) * ipow(BigInt(k + 1), ul(k)),
                     ipow(BigInt(b + 1), ul(b)) * ipow(BigInt(k), ul(k))));
}

InequalityCertificate check_exp_bound_first(long n_max, int workers) {
  InequalityCertificate cert = start("eq-negative_appendix", "1<=b, 2b+2<=n<=" + std::to_string(n_max));
  const PowerTables t(n_max);
  auto parts = parallel_map(ul(std::max(0L, n_max - 3)), workers, [&](size_t i) {
    const long n = static_cast<long>(i) + 4;
    std::vector<ViolationReport> w;
    for (long b = 1; 2 * b + 2 <= n; ++b) {
      // A_b (1 - 1/m)^{m-1} = A_b / A_{m-1}
      if (compare_a(t, b, n - b - 1) != Sign::Negative) {
        w.push_back(ViolationReport::make("eq-negative_appendix", b, n, Rational(1), Rational(1)));
      }
    }
    return w;
  });
  cert.witnesses = flatten(std::move(parts));
  for (long n = 4; n <= n_max; ++n) cert.points_checked += (n - 2) / 2;
  cert.finalize();
  return cert;
}

InequalityCertificate check_exp_bound_second(long n_max, int workers) {
  InequalityCertificate cert = start("eq-p_above_n_over_2-B", "(n+1)/2<=b<=n-2, 6<=n<=" + std::to_string(n_max));
  const PowerTables t(n_max);
  auto parts = parallel_map(ul(std::max(0L, n_max - 5)), workers, [&](size_t i) {
    const long n = static_cast<long>(i) + 6;
    std::vector<ViolationReport> w;
    for (long b = (n + 2) / 2; b <= n - 2; ++b) {
      if (compare_a(t, n - b - 1, b) != Sign::Negative) {
        w.push_back(ViolationReport::make("eq-p_above_n_over_2-B", b, n, Rational(1), Rational(1)));
      }
    }
    return w;
  });
  cert.witnesses = flatten(std::move(parts));
  for (long n = 6; n <= n_max; ++n) cert.points_checked += std::max(0L, n - 2 - (n + 2) / 2 + 1);
  cert.finalize();
  return cert;
}

// --- (diff_z_bn_lowerbound) --------------------------------------------------

Rational z_lowerbound(long b, long n) {
  if (b < 1 || 2 * b + 1 > n) throw DomainError("z lower bound needs b <= (n-1)/2");
  const long m = n - b - 1;
  const Rational g = integrate_g_delta(BinomialSpec(b, n));
  const Rational factor = 1 - make_rational(1, 6 * (b + 1)) - make_rational(1, 18 * (b + 1) * (b + 1)) +
                          make_rational(1, 6 * m) + make_rational(1, 6 * m * m);
  const Rational corner = rpow(make_rational(b + 1, n), ul(b)) * rpow(make_rational(m, n), ul(n - b));
  const Rational prefactor =
      make_rational(ipow(BigInt(n), ul(n)), BigInt(n - b) * ipow(BigInt(b + 1), ul(b)) * ipow(BigInt(m), ul(m)));
  return prefactor * (b * g - corner * factor);
}

InequalityCertificate check_z_lowerbound(long b_lo, long b_hi, long n_hi, int workers,
                                         std::vector<ZLowerboundBand>* bands) {
  if (b_lo < 1 || b_hi < b_lo) throw DomainError("empty b range");
  if (n_hi > 2000) throw ResourceError("z lower bound scan limited to n <= 2000");
  InequalityCertificate cert = start("eq-diff_z_bn_lowerbound",
                             range_text("", b_lo, "<=b<=", b_hi) + ", 2b+1<=n<=" + std::to_string(n_hi));
  const long n_lo = 2 * b_lo + 1;
  if (n_hi < n_lo) throw DomainError("empty n range");
  struct Point {
    long b;
    bool holds;
    ViolationReport report;
  };
  auto parts = parallel_map(ul(n_hi - n_lo + 1), workers, [&](size_t i) {
    const long n = n_lo + static_cast<long>(i);
    const long top = std::min(b_hi, (n - 1) / 2);
    std::vector<Point> out;
    if (top < b_lo) return out;
    TailTable table(n, top + 1);
    for (long b = b_lo; b <= top; ++b) {
      const Rational diff = table.z(b + 1) - table.z(b);
      const Rational bound = z_lowerbound(b, n);
      const bool ok = bound <= diff;
      out.push_back(Point{b, ok, ok ? ViolationReport{} : ViolationReport::make("eq-diff_z_bn_lowerbound", b, n, bound, diff)});
    }
    return out;
  });
  std::map<long, ZLowerboundBand> per_b;
  for (long k = 0; k < static_cast<long>(parts.size()); ++k) {
    const long n = n_lo + k;
    for (auto& p : parts[ul(k)]) {
      ++cert.points_checked;
      auto& band = per_b.try_emplace(p.b, ZLowerboundBand{p.b, 2 * p.b + 1, n_hi, 2 * p.b + 1}).first->second;
      if (!p.holds) {
        band.holds_from = n + 1 > n_hi ? 0 : n + 1;
        cert.witnesses.push_back(std::move(p.report));
      }
    }
  }
  for (auto& [b, band] : per_b) {
    if (band.holds_from != band.n_lo) {
      cert.notes.push_back("b=" + std::to_string(b) + ": bound holds from n=" + std::to_string(band.holds_from));
    }
    if (bands != nullptr) bands->push_back(band);
  }
  cert.finalize();
  return cert;
}

// --- b <= 5 and b = n - 5 ----------------------------------------------------------

IntervalValue appendix_b_ineq1(long n, const Rational& c, const PrecisionPolicy& policy) {
  const IntervalValue e = e_enclosure(policy);
  return pt(make_rational(899, 5)) - pt(make_rational(523, 8)) * e +
         (pt(Rational(20531 * 6) - c) - pt(9025 * 5) * e) / pt(Rational(60 * (n - 5)));
}

IntervalValue appendix_b_ineq2(long n, const Rational& c, const PrecisionPolicy& policy) {
  const IntervalValue e = e_enclosure(policy);
  const Rational m = n - 5;
  return pt(c) + pt(3) * (pt(80527 * 4) - pt(24625 * 5) * e) / pt(2 * m) +
         pt(5) * (pt(11009 * 12) - pt(63125) * e) / pt(m * m) -
         pt(12) * (pt(20529) - pt(3125 * 5) * e) / pt(m * m * m) - pt(Rational(6 * 217291) / (m * m * m * m)) -
         pt(Rational(6 * 156627) / (m * m * m * m * m)) - pt(Rational(60 * 3125) / (m * m * m * m * m * m));
}

std::vector<IntervalValue> n_minus_5_bound_coefficients(const PrecisionPolicy& policy) {
  const IntervalValue inv_e = pt(1) / e_enclosure(policy);
  return {
      pt(make_rational(1097, 12)) * inv_e - pt(make_rational(103, 3)),
      pt(make_rational(18649, 24)) * inv_e - pt(make_rational(824, 3)),
      pt(make_rational(4705, 2)) * inv_e - pt(make_rational(2240, 3)),
      pt(make_rational(832, 3)) - pt(make_rational(5225, 8)) * inv_e,
      pt(make_rational(24625, 12)) * inv_e - pt(256),
      pt(625) * inv_e,
  };
}

IntervalValue n_minus_5_bound(long n, const PrecisionPolicy& policy) {
  auto coeffs = n_minus_5_bound_coefficients(policy);
  IntervalValue sum = pt(0);
  Rational scale = 1;
  for (auto& c : coeffs) {
    sum = sum + c * pt(scale);
    scale /= (n - 4);
  }
  return sum;
}

std::vector<InequalityCertificate> check_appendix_b(const PrecisionPolicy& policy) {
  std::vector<InequalityCertificate> out;

  // (i) b <= 5 sign pattern
  {
    InequalityCertificate cert = start("appB-small-b", "1<=b<=5, b+1<=n<=160");
    for (long b = 1; b <= 5; ++b) {
      for (long n = b + 1; n <= 160; ++n) {
        ++cert.points_checked;
        const Sign s = p_diff_sign(b, n);
        const Sign want = n >= 3 * b + 2 ? Sign::Positive : Sign::Negative;
        if (s != want) {
          cert.witnesses.push_back(ViolationReport::make("appB-small-b", b, n, tail_p(BinomialSpec(b + 1, n)),
                                                         tail_p(BinomialSpec(b, n))));
        }
      }
    }
    cert.notes.push_back("method gap b=3, n in [11,12]: covered by the exact scan");
    cert.notes.push_back("method gap b=4, n in [14,16]: covered by the exact scan");
    cert.finalize();
    out.push_back(std::move(cert));
  }

  // (ii)-(iii) printed brackets, as integers after scaling by n^n
  {
    InequalityCertificate cert = start("appB-brackets", "n in {16,17,18,19}, b=5");
    struct Bracket {
      long n;
      long lo_mantissa;
      long hi_mantissa;
      unsigned long exponent;  // mantissa * 10^exponent
      bool reversed;
    };
    const Bracket brackets[] = {{17, 3387, 3389, 17, false},
                                {18, 1619, 1622, 19, false},
                                {19, 8176, 8199, 20, false},
                                {16, 7505, 7503, 15, true}};
    for (const auto& br : brackets) {
      ++cert.points_checked;
      const BigInt p5 = scaled_tail(BinomialSpec(5, br.n)).below;
      const BigInt p6 = scaled_tail(BinomialSpec(6, br.n)).below;
      const BigInt lo = br.lo_mantissa * ipow(BigInt(10), br.exponent);
      const BigInt hi = br.hi_mantissa * ipow(BigInt(10), br.exponent);
      const bool ok = br.reversed ? (p5 > lo && lo > hi && hi > p6) : (p5 < lo && lo < hi && hi < p6);
      if (!ok) cert.witnesses.push_back(ViolationReport::make("appB-n" + std::to_string(br.n), 5, br.n, Rational(p5), Rational(p6)));
    }
    cert.finalize();
    out.push_back(std::move(cert));
  }

  // (iv) split inequalities with C = 2300
  {
    InequalityCertificate cert = start("appB-split", "b=5, C=2300, 20<=n<=200");
    const Rational c = 2300;
    IntervalValue prev1 = appendix_b_ineq1(20, c, policy);
    IntervalValue prev2 = appendix_b_ineq2(20, c, policy);
    auto record = [&](const char* id, long n, const IntervalValue& v, Verdict verdict) {
      if (verdict == Verdict::Fails) cert.witnesses.push_back(ViolationReport::make(id, 5, n, v.hi, 0));
      if (verdict == Verdict::Inconclusive) ++cert.inconclusive_points;
    };
    auto positive = [](const IntervalValue& v) {
      return v.lo > 0 ? Verdict::Holds : (v.hi <= 0 ? Verdict::Fails : Verdict::Inconclusive);
    };
    record("eq-ineq_1", 20, prev1, positive(prev1));
    record("eq-ineq_2", 20, prev2, positive(prev2));
    cert.points_checked += 2;
    for (long n = 21; n <= 200; ++n) {
      const IntervalValue v1 = appendix_b_ineq1(n, c, policy);
      const IntervalValue v2 = appendix_b_ineq2(n, c, policy);
      auto increasing = [](const IntervalValue& before, const IntervalValue& after) {
        return before.hi < after.lo ? Verdict::Holds : (before.lo >= after.hi ? Verdict::Fails : Verdict::Inconclusive);
      };
      record("eq-ineq_1-increasing", n, v1, increasing(prev1, v1));
      record("eq-ineq_2-increasing", n, v2, increasing(prev2, v2));
      cert.points_checked += 2;
      prev1 = v1;
      prev2 = v2;
    }
    cert.finalize();
    out.push_back(std::move(cert));
  }

  // (v) b = n - 5
  {
    InequalityCertificate cert = start("appB-n-minus-5", "b=n-5: bound at n=28, exact 11<=n<=27");
    const IntervalValue at28 = n_minus_5_bound(28, policy);
    ++cert.points_checked;
    if (!(at28.hi < 0)) {
      if (at28.lo >= 0) {
        cert.witnesses.push_back(ViolationReport::make("appB-n-minus-5-bound", 23, 28, at28.lo, 0));
      } else {
        ++cert.inconclusive_points;
      }
    }
    auto coeffs = n_minus_5_bound_coefficients(policy);
    for (size_t k = 0; k < coeffs.size(); ++k) {
      ++cert.points_checked;
      const bool want_negative = k == 0;
      const bool ok = want_negative ? coeffs[k].hi < 0 : coeffs[k].lo > 0;
      if (!ok) {
        cert.witnesses.push_back(ViolationReport::make("appB-n-minus-5-coefficient", static_cast<long>(k), 28,
                                                       coeffs[k].midpoint(), 0));
      }
    }
    for (long n = 11; n <= 27; ++n) {
      ++cert.points_checked;
      if (p_diff_sign(n - 5, n) != Sign::Negative) {
        cert.witnesses.push_back(ViolationReport::make("appB-n-minus-5", n - 5, n, tail_p(BinomialSpec(n - 4, n)),
                                                       tail_p(BinomialSpec(n - 5, n))));
      }
    }
    cert.finalize();
    out.push_back(std::move(cert));
  }
  return out;
}

// --- root bounds --------------------------------------------------------------

namespace {

Poly first_quadratic() { return Poly{-39, 77, 20}; }
Poly first_cubic() { return Poly{-156, -1280, -1047, 28}; }
Poly second_quadratic() { return Poly{129, 77, 20}; }
Poly second_cubic() { return Poly{-129, -1075, -160, 12}; }

InequalityCertificate root_bound_certificate(const char* id, long b_lo, long b_max, const Poly& quad,
                                             const Poly& cubic) {
  InequalityCertificate cert = start(id, range_text("", b_lo, "<=b<=", b_max) + " plus tail");
  for (long b = b_lo; b <= b_max; ++b) {
    ++cert.points_checked;
    const BigInt v = 4 * peval(quad, b) * peval(cubic, b);
    if (v <= 0) cert.witnesses.push_back(ViolationReport::make(id, b, 0, Rational(v), 0));
  }
  // Beyond b_max: each factor shifted to b_max has non-negative coefficients
  // and a positive constant, so both stay positive.
  ++cert.points_checked;
  for (const Poly* f : {&quad, &cubic}) {
    if (!positive_on_half_line(taylor_shift(*f, b_max))) {
      cert.witnesses.push_back(ViolationReport::make(std::string(id) + "-tail", b_max, 0, Rational(peval(*f, b_max)), 0));
    }
  }
  cert.finalize();
  return cert;
}

}  // namespace

BigInt root_bound_first(long b) { return 4 * peval(first_quadratic(), b) * peval(first_cubic(), b); }
BigInt root_bound_second(long b) { return 4 * peval(second_quadratic(), b) * peval(second_cubic(), b); }

std::vector<InequalityCertificate> check_root_bounds(long b_max) {
  std::vector<InequalityCertificate> out;
  out.push_back(root_bound_certificate("eq-small_b_ineq-root", 39, b_max, first_quadratic(), first_cubic()));
  out.back().notes.push_back("sharpness probe b=38: product = " + root_bound_first(38).get_str());
  out.push_back(root_bound_certificate("eq-medium_b_ineq-root", 19, b_max, second_quadratic(), second_cubic()));
  out.back().notes.push_back("sharpness probe b=18: product = " + root_bound_second(18).get_str());
  return out;
}

}  // namespace rambin
