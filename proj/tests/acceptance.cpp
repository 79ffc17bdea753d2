// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "rambin/asymptotics.hpp"
#include "rambin/certificates.hpp"
#include "rambin/exactcore.hpp"
#include "rambin/gfun.hpp"
#include "rambin/parallel.hpp"
#include "rambin/poisson.hpp"
#include "rambin/smalldev.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace rambin;

namespace {

int workers = 1;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string first_violation(const std::vector<ViolationReport>& v) {
  if (v.empty()) return "";
  const auto& f = v.front();
  return " first: " + f.claim_id + " b=" + std::to_string(f.b) + " n=" + std::to_string(f.n) + " lhs=" + f.lhs +
         " rhs=" + f.rhs;
}

std::string cert_line(const InequalityCertificate& c) {
  return c.claim_id + " " + cert_status_name(c.status) + " (" + std::to_string(c.points_checked) + " pts)";
}

// 1. sign of p_{b+1,n} - p_{b,n} flips exactly at n = 3b + 2
Outcome theorem3_boundary() {
  const auto rows = theorem3_scan(300, workers);
  const auto bad = theorem3_violations(rows);
  return {bad.empty(), std::to_string(rows.size()) + " pairs, " + std::to_string(bad.size()) + " mismatches" +
                           first_violation(bad)};
}

// 2. ranges, anchors and monotonicity of z for b <= 80, n <= 320
Outcome theorem1_suite() {
  auto bad = theorem1_scan(80, 320, workers);
  long anchors = 0;
  for (long b = 1; b <= 80; ++b) {
    for (long n : {b, 2 * b}) {
      ++anchors;
      const Rational z = ramanujan_z(BinomialSpec(b, n));
      if (z != make_rational(1, 2)) bad.push_back(ViolationReport::make("z-anchor", b, n, z, make_rational(1, 2)));
    }
  }
  return {bad.empty(), std::to_string(bad.size()) + " violations, " + std::to_string(anchors) + " anchors" +
                           first_violation(bad)};
}

// 3. z_{b,n} + z_{n-b,n} = 1
Outcome symmetry() {
  const auto bad = symmetry_scan(300, workers);
  return {bad.empty(), std::to_string(bad.size()) + " violations" + first_violation(bad)};
}

// 4. printed decimal brackets, compared as integers after scaling by n^n
Outcome brackets() {
  struct Chain {
    long n;
    long lo_mant, hi_mant;
    long exp;
    bool reversed;  // p_{5,n} above both constants, p_{6,n} below
  };
  const Chain chains[] = {{17, 3387, 3389, 17, false},
                          {18, 1619, 1622, 19, false},
                          {19, 8176, 8199, 20, false},
                          {16, 7505, 7503, 15, true}};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& c : chains) {
    const BigInt p5 = scaled_tail(BinomialSpec(5, c.n)).below;
    const BigInt p6 = scaled_tail(BinomialSpec(6, c.n)).below;
    const BigInt a = c.lo_mant * ipow(10, static_cast<unsigned long>(c.exp));
    const BigInt b = c.hi_mant * ipow(10, static_cast<unsigned long>(c.exp));
    const bool holds = c.reversed ? (p5 > a && a > b && b > p6) : (p5 < a && a < b && b < p6);
    ok = ok && holds;
    detail << "n=" << c.n << (holds ? " ok " : " BROKEN ");
  }
  return {ok, detail.str()};
}

// 5. integral identities, closed-form derivatives, Taylor sandwich
Outcome gfun_claims() {
  long c1 = 0, c1_bad = 0;
  for (long n = 2; n <= 60; ++n) {
    for (long b = 1; b < n; ++b, ++c1) c1_bad += verify_claim1(BinomialSpec(b, n)) ? 0 : 1;
  }
  long c2 = 0, c2_bad = 0;
  for (long n = 2; n <= 30; ++n) {
    for (long b = 1; b < n; ++b, ++c2) c2_bad += verify_claim2(BinomialSpec(b, n)) ? 0 : 1;
  }
  std::vector<std::pair<long, long>> pairs;
  for (long n = 10; n <= 200; ++n) {
    for (long b = 5; 2 * b <= n; ++b) pairs.emplace_back(b, n);
  }
  auto parts = parallel_map(pairs.size(), workers,
                            [&](size_t i) { return verify_claim3(BinomialSpec(pairs[i].first, pairs[i].second)); });
  const auto c3_bad = flatten(std::move(parts));
  std::set<long> bad_b;
  long lo_n = 0, hi_n = 0;
  for (const auto& v : c3_bad) {
    bad_b.insert(v.b);
    lo_n = lo_n ? std::min(lo_n, v.n) : v.n;
    hi_n = std::max(hi_n, v.n);
  }
  std::ostringstream d;
  d << "claim1 " << c1_bad << "/" << c1 << " bad, claim2 " << c2_bad << "/" << c2 << " bad, claim3 "
    << c3_bad.size() << " bad bounds over " << pairs.size() << " pairs";
  if (!c3_bad.empty()) {
    d << " (b in {";
    for (auto it = bad_b.begin(); it != bad_b.end(); ++it) d << (it == bad_b.begin() ? "" : ",") << *it;
    d << "}, n=" << lo_n << ".." << hi_n << ";" << first_violation(c3_bad) << ")";
  }
  return {c1_bad == 0 && c2_bad == 0 && c3_bad.empty(), d.str()};
}

// 6. factorial moments of Poisson(b) and alternating falling-factorial sums
Outcome lemma1() {
  auto bad = parallel_map(200, workers, [&](size_t i) {
    const long b = static_cast<long>(i) + 1;
    long fails = 0;
    for (long s = 1; s <= b; ++s) fails += factorial_moment_identity(b, s) ? 0 : 1;
    return fails;
  });
  long moment_bad = 0;
  for (long f : bad) moment_bad += f;
  long sum_bad = 0;
  for (long k = 2; k <= 30; ++k) {
    for (long s = 1; s < k; ++s) sum_bad += falling_factorial_sum(k, s) == 0 ? 0 : 1;
  }
  return {moment_bad == 0 && sum_bad == 0,
          std::to_string(moment_bad) + " identity failures, " + std::to_string(sum_bad) + " nonzero sums"};
}

// 7. rigorous y, alpha, beta enclosures for b = 1..300, at most 200 digits
Outcome poisson_enclosures() {
  const PoissonSuite suite = poisson_suite(300, PrecisionPolicy(50, 2, 2), workers);
  int max_digits = 0;
  for (const auto& c : suite.checks) max_digits = std::max(max_digits, c.digits);
  const long fails = suite.count(Verdict::Fails);
  const long open = suite.count(Verdict::Inconclusive);
  return {fails == 0 && open == 0, std::to_string(suite.checks.size()) + " checks, " + std::to_string(fails) +
                                       " fail, " + std::to_string(open) + " inconclusive, max digits " +
                                       std::to_string(max_digits)};
}

// 8. scaled residual of the large-n expansion of z
Outcome claim5() {
  std::ostringstream d;
  bool ok = true;
  d << "K=" << decimal_string(claim5_bound(), 6);
  for (long b : {30L, 60L, 120L}) {
    const Claim5Check c = claim5_check(b);
    ok = ok && c.verdict == Verdict::Holds;
    d << " b=" << b << ":" << verdict_name(c.verdict) << "(r=" << decimal_string(c.residual.value, 6) << ")";
  }
  return {ok, d.str()};
}

// 9. lower sign flip of z_{b+1,n} - z_{b,n} against sqrt(77n/360)
Outcome theorem2_scale() {
  std::ostringstream d;
  d << std::fixed << std::setprecision(6);
  bool within = true;
  std::vector<double> gaps;
  for (long n : {10000L, 40000L, 250000L}) {
    const ThresholdReport t = theorem2_threshold(n, PrecisionPolicy(60, 1, 2), workers);
    const double gap = std::fabs(t.ratio_low - 1.0);
    within = within && gap <= 0.3 && t.inconclusive.empty();
    gaps.push_back(gap);
    d << "n=" << n << " b*=" << t.b_star_low << " ratio=" << t.ratio_low << "; ";
  }
  const bool toward_one = gaps[1] <= gaps[0] && gaps[2] <= gaps[1];
  d << (within ? "within 0.3" : "outside 0.3") << ", " << (toward_one ? "approaching 1" : "not approaching 1");
  return {within && toward_one, d.str()};
}

// 10. exact finite-range certificates for the b >= 6 argument
Outcome appendix_c() {
  std::vector<InequalityCertificate> certs;
  certs.push_back(check_small_b(RangeSpec::small_band(6, 39, 157), workers));
  certs.push_back(check_small_b_sufficient(39, 10000, workers));
  certs.push_back(check_medium(RangeSpec::medium_band(6, 19), workers));
  for (auto& c : check_root_bounds(10000)) certs.push_back(std::move(c));
  certs.push_back(check_above_half(5, 1000));
  certs.push_back(check_exp_bound_first(2000, workers));
  certs.push_back(check_exp_bound_second(2000, workers));
  bool ok = true;
  std::string d;
  for (const auto& c : certs) {
    ok = ok && c.status == CertStatus::Verified;
    if (!d.empty()) d += "; ";
    d += cert_line(c);
  }
  return {ok, d};
}

// 11. Samuels floor, two-point conjecture grid, brute-force tail oracle
Outcome small_deviations() {
  const auto samuels = verify_samuels(200, workers);
  bool ok = samuels.status == CertStatus::Verified;
  const Rational step = make_rational(1, 20);
  long points = 0, violations = 0, off_family = 0, missing = 0, oracle_bad = 0, unchecked = 0, reduction = 0;
  for (long n = 1; n <= 20; ++n) {
    const ConjectureScan s = conjecture_scan(n, step, workers);
    points += s.points;
    violations += static_cast<long>(s.violations.size());
    oracle_bad += static_cast<long>(s.oracle_mismatches.size());
    unchecked += s.points - s.oracle_checked;
    reduction += static_cast<long>(s.reduction_failures.size());
    long hits = 0;
    for (const auto& e : s.equalities) {
      if (on_equality_family(e.alpha, e.beta, n)) {
        ++hits;
      } else {
        ++off_family;
      }
    }
    // family points on the grid: alpha = 0, beta = (n+1)/k for an integer k <= n
    long family = 0;
    for (Rational beta = 1 + step; beta <= n + 2; beta += step) {
      if (on_equality_family(0, beta, n) && (n + 1) / beta <= n) ++family;
    }
    missing += family - hits;
  }
  ok = ok && violations == 0 && off_family == 0 && missing == 0 && oracle_bad == 0 && unchecked == 0 &&
       reduction == 0;
  std::ostringstream d;
  d << "samuels " << cert_status_name(samuels.status) << " (" << samuels.points_checked << " pts); conjecture "
    << points << " pts, " << violations << " violations, " << off_family << " off-family equalities, " << missing
    << " missing family equalities, " << oracle_bad << " oracle mismatches";
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--workers") == 0) workers = std::max(1, std::atoi(argv[i + 1]));
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"p difference sign boundary, n <= 300", theorem3_boundary},
      {"z range, anchors and monotonicity, b <= 80, n <= 320", theorem1_suite},
      {"z symmetry, n <= 300", symmetry},
      {"scaled tail brackets, n = 16..19", brackets},
      {"integral identities, derivative closed form, Taylor sandwich", gfun_claims},
      {"Poisson factorial moments and falling-factorial sums", lemma1},
      {"Poisson y, alpha, beta enclosures, b <= 300", poisson_enclosures},
      {"z expansion residual, b in {30, 60, 120}", claim5},
      {"sign-flip scale against sqrt(77n/360)", theorem2_scale},
      {"finite-range certificates for b >= 6", appendix_c},
      {"small deviations", small_deviations},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " | "
              << o.detail << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<size_t>(failed)) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
