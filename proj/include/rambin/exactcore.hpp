#ifndef RAMBIN_EXACTCORE_HPP
#define RAMBIN_EXACTCORE_HPP

#include "rambin/numeric.hpp"
#include "rambin/report.hpp"

#include <vector>

namespace rambin {

// Parameters of xi_{b,n} ~ Bin(n, b/n); 1 <= b <= n.
struct BinomialSpec {
  long b;
  long n;

  BinomialSpec(long b_, long n_);
  bool operator==(const BinomialSpec&) const = default;
};

// Tail quantities scaled by n^n: p_{b,n} = below / scale and
// P(xi = b) = at_b / scale, all exact integers.
struct ScaledTail {
  BigInt below;
  BigInt at_b;
  BigInt scale;
};

struct TailValue {
  BinomialSpec spec;
  Rational p;
  Rational pmf_at_b;
  Rational z;
};

Rational exact_pmf(const BinomialSpec& spec, long i);
ScaledTail scaled_tail(const BinomialSpec& spec);
Rational tail_p(const BinomialSpec& spec);

// z_{b,n} = (1/2 - p_{b,n}) / P(xi_{b,n} = b).
Rational ramanujan_z(const BinomialSpec& spec);
TailValue tail_value(const BinomialSpec& spec);

long median_binomial(const BinomialSpec& spec);

// Exact sign of p_{b+1,n} - p_{b,n}; requires 1 <= b < n.
Sign p_diff_sign(long b, long n);

// Exact sign of z_{b+1,n} - z_{b,n}; requires 1 <= b < n.
Sign z_diff_sign_exact(long b, long n);

// z_{b,n} + z_{n-b,n} == 1.
bool z_symmetry_check(long b, long n);

// All scaled tails for one n: entry b holds n^n P(xi_{b,n} < b) and
// n^n P(xi_{b,n} = b), for 1 <= b <= min(n, b_limit) (b_limit < 1: all).
class TailTable {
 public:
  explicit TailTable(long n, long b_limit = 0);

  [[nodiscard]] long n() const { return n_; }
  [[nodiscard]] const BigInt& scale() const { return scale_; }
  [[nodiscard]] const BigInt& below(long b) const { return below_.at(static_cast<size_t>(b)); }
  [[nodiscard]] const BigInt& at(long b) const { return at_.at(static_cast<size_t>(b)); }
  [[nodiscard]] Rational p(long b) const;
  [[nodiscard]] Rational z(long b) const;

 private:
  long n_;
  BigInt scale_;
  std::vector<BigInt> below_;
  std::vector<BigInt> at_;
};

struct PSignRow {
  long b;
  long n;
  Sign sign;
  bool boundary_ok;  // sign is + iff n >= 3b + 2
};

// Exhaustive p_{b+1,n} - p_{b,n} sign map for 1 <= b < n <= n_max.
std::vector<PSignRow> theorem3_scan(long n_max, int workers = 1);
std::vector<ViolationReport> theorem3_violations(const std::vector<PSignRow>& rows);

// Jogdeo-Samuels properties for b <= b_max, b < n <= n_max (plus the
// z_{b,b} anchor and z >= 1/3 for n >= 2b).
std::vector<ViolationReport> theorem1_scan(long b_max, long n_max, int workers = 1);

// z_{b,n} + z_{n-b,n} = 1 for 1 <= b < n <= n_max.
std::vector<ViolationReport> symmetry_scan(long n_max, int workers = 1);

}  // namespace rambin

#endif
