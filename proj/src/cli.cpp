#include "rambin/cli.hpp"

#include "rambin/asymptotics.hpp"
#include "rambin/certificates.hpp"
#include "rambin/exactcore.hpp"
#include "rambin/gfun.hpp"
#include "rambin/parallel.hpp"
#include "rambin/poisson.hpp"
#include "rambin/smalldev.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace rambin {

namespace {

unsigned long ul(long v) { return static_cast<unsigned long>(v); }

long pick(long value, long fallback) { return value > 0 ? value : fallback; }

const char* sign_text(Sign s) {
  switch (s) {
    case Sign::Positive: return "+";
    case Sign::Negative: return "-";
    default: return "0";
  }
}

std::string interval_text(const IntervalValue& v) { return decimal_string(v.midpoint(), 20); }

void add_violations(Report& r, std::vector<ViolationReport> v) {
  for (auto& x : v) r.violations.push_back(std::move(x));
}

void finish(Report& r) { std::sort(r.violations.begin(), r.violations.end(), report_order); }

// --- scan-p / scan-z -----------------------------------------------------------

Report scan_p(const RunConfig& cfg) {
  const long n_max = pick(cfg.n_max, 300);
  if (n_max > 2000) throw ResourceError("scan-p limited to n <= 2000");
  Report r;
  r.meta["command"] = "scan-p";
  r.meta["n_max"] = std::to_string(n_max);
  r.columns = {"claim_id", "b", "n", "sign", "boundary_ok"};
  auto rows = theorem3_scan(n_max, cfg.workers);
  for (const auto& row : rows) {
    r.add_row({"thm3", std::to_string(row.b), std::to_string(row.n), sign_text(row.sign),
               row.boundary_ok ? "true" : "false"});
  }
  add_violations(r, theorem3_violations(rows));
  return r;
}

Report scan_z(const RunConfig& cfg) {
  const long n_max = pick(cfg.n_max, 200);
  if (n_max > kExactCutoff) throw ResourceError("scan-z limited to n <= 2000");
  Report r;
  r.meta["command"] = "scan-z";
  r.meta["n_max"] = std::to_string(n_max);
  r.columns = {"claim_id", "b", "n", "sign"};
  struct Part {
    std::vector<Sign> signs;
    std::vector<ViolationReport> bad;
  };
  auto parts = parallel_map(ul(n_max - 1), cfg.workers, [&](size_t i) {
    const long n = static_cast<long>(i) + 2;
    const long b_top = cfg.b_max > 0 ? std::min(cfg.b_max, n - 1) : n - 1;
    TailTable table(n);
    Part part;
    std::vector<Rational> z(ul(n + 1));
    for (long b = 1; b <= n; ++b) z[ul(b)] = table.z(b);
    std::vector<Sign> all(ul(n));
    for (long b = 1; b < n; ++b) all[ul(b)] = sign_of(Rational(z[ul(b + 1)] - z[ul(b)]));
    for (long b = 1; b <= b_top; ++b) part.signs.push_back(all[ul(b)]);
    // symmetry z_{b,n} + z_{n-b,n} = 1 mirrors the sign map: s_b = s_{n-1-b}
    for (long b = 1; b < n - 1 - b; ++b) {
      if (all[ul(b)] != all[ul(n - 1 - b)]) {
        part.bad.push_back(ViolationReport::make("z-sign-symmetry", b, n, z[ul(b + 1)] - z[ul(b)],
                                                 z[ul(n - b)] - z[ul(n - b - 1)]));
      }
    }
    return part;
  });
  for (size_t i = 0; i < parts.size(); ++i) {
    const long n = static_cast<long>(i) + 2;
    for (size_t k = 0; k < parts[i].signs.size(); ++k) {
      r.add_row({"z-diff", std::to_string(k + 1), std::to_string(n), sign_text(parts[i].signs[k])});
    }
    add_violations(r, std::move(parts[i].bad));
  }
  return r;
}

// --- threshold -------------------------------------------------------------------

std::string join_longs(const std::vector<long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

Report threshold(const RunConfig& cfg) {
  if (cfg.n <= 0) throw DomainError("threshold needs --n");
  const ThresholdReport t = theorem2_threshold(cfg.n, cfg.precision, cfg.workers);
  Report r;
  r.meta["command"] = "threshold";
  r.meta["digits"] = std::to_string(cfg.precision.digits);
  r.columns = {"claim_id", "n", "predicted", "window_lo", "window_hi", "b_star_low", "b_star_high",
               "ratio_low", "ratio_high", "middle_sign", "sign_changes", "inconclusive"};
  auto fixed = [](double v) {
    std::ostringstream s;
    s.precision(6);
    s << std::fixed << v;
    return s.str();
  };
  r.add_row({"thm2", std::to_string(t.n), fixed(t.predicted), std::to_string(t.window_lo),
             std::to_string(t.window_hi), std::to_string(t.b_star_low), std::to_string(t.b_star_high),
             fixed(t.ratio_low), fixed(t.ratio_high), sign_text(t.middle_sign), join_longs(t.sign_changes),
             join_longs(t.inconclusive)});
  r.inconclusive = static_cast<long>(t.inconclusive.size());
  return r;
}

// --- verify ------------------------------------------------------------------------

Report verify(const RunConfig& cfg) {
  const std::set<std::string> known = {"1", "2", "3", "4", "5", "lemma1"};
  std::set<std::string> claims(cfg.claims.begin(), cfg.claims.end());
  if (claims.empty()) claims = known;
  for (const auto& c : claims) {
    if (!known.count(c)) throw DomainError("unknown claim '" + c + "' (use 1,2,3,4,5,lemma1)");
  }
  const long n_max = pick(cfg.n_max, 60);
  const long b_max = pick(cfg.b_max, 200);
  Report r;
  r.meta["command"] = "verify";
  r.meta["n_max"] = std::to_string(n_max);
  r.meta["b_max"] = std::to_string(b_max);
  r.columns = {"claim_id", "b", "n", "verdict"};
  auto row = [&](const std::string& id, long b, long n, Verdict v) {
    r.add_row({id, std::to_string(b), std::to_string(n), verdict_name(v)});
    if (v == Verdict::Inconclusive) ++r.inconclusive;
  };
  std::vector<std::pair<long, long>> pairs;
  for (long n = 2; n <= n_max; ++n) {
    for (long b = 1; b < n; ++b) pairs.emplace_back(b, n);
  }

  if (claims.count("1")) {
    auto ok = parallel_map(pairs.size(), cfg.workers, [&](size_t i) {
      return verify_claim1(BinomialSpec(pairs[i].first, pairs[i].second));
    });
    for (size_t i = 0; i < pairs.size(); ++i) {
      const auto [b, n] = pairs[i];
      row("claim1", b, n, ok[i] ? Verdict::Holds : Verdict::Fails);
      if (!ok[i]) r.violations.push_back(ViolationReport::make("claim1", b, n, 0, 0));
    }
  }
  if (claims.count("2")) {
    if (n_max > kOracleMaxN) throw ResourceError("claim 2 oracle limited to n <= 60");
    auto ok = parallel_map(pairs.size(), cfg.workers, [&](size_t i) {
      return verify_claim2(BinomialSpec(pairs[i].first, pairs[i].second));
    });
    for (size_t i = 0; i < pairs.size(); ++i) {
      const auto [b, n] = pairs[i];
      row("claim2", b, n, ok[i] ? Verdict::Holds : Verdict::Fails);
      if (!ok[i]) r.violations.push_back(ViolationReport::make("claim2", b, n, 0, 0));
    }
  }
  if (claims.count("3")) {
    std::vector<std::pair<long, long>> band;
    for (auto [b, n] : pairs) {
      if (b >= 5 && 2 * b <= n) band.emplace_back(b, n);
    }
    auto reports = parallel_map(band.size(), cfg.workers, [&](size_t i) {
      return verify_claim3(BinomialSpec(band[i].first, band[i].second));
    });
    for (size_t i = 0; i < band.size(); ++i) {
      row("claim3", band[i].first, band[i].second, reports[i].empty() ? Verdict::Holds : Verdict::Fails);
      add_violations(r, std::move(reports[i]));
    }
  }
  if (claims.count("4")) {
    const long top = std::max(50L, std::min(b_max, 300L));
    auto checks = parallel_map(ul(top - 49), cfg.workers, [&](size_t i) {
      const long b = static_cast<long>(i) + 50;
      auto v = moment_expansion_residuals(b, cfg.precision);
      v.push_back(tail_expansion_residual(b, cfg.precision));
      return v;
    });
    for (auto& list : checks) {
      for (auto& c : list) {
        row(c.claim_id, c.b, 0, c.verdict);
        if (c.verdict == Verdict::Fails) {
          r.violations.push_back(ViolationReport::make(c.claim_id, c.b, 0, c.scaled_residual.lo, c.bound));
        }
      }
    }
  }
  if (claims.count("5")) {
    for (long b : {30L, 60L, 120L}) {
      const Claim5Check c = claim5_check(b, cfg.precision);
      row("claim5", c.b, c.n, c.verdict);
      if (c.verdict == Verdict::Fails) {
        r.violations.push_back(ViolationReport::make("claim5", c.b, c.n, c.residual.value, claim5_bound()));
      }
    }
  }
  if (claims.count("lemma1")) {
    auto ok = parallel_map(ul(b_max), cfg.workers, [&](size_t i) {
      const long b = static_cast<long>(i) + 1;
      std::vector<long> failed;
      for (long s = 1; s <= b; ++s) {
        if (!factorial_moment_identity(b, s)) failed.push_back(s);
      }
      return failed;
    });
    for (long b = 1; b <= b_max; ++b) {
      const auto& failed = ok[ul(b - 1)];
      row("lemma1", b, 0, failed.empty() ? Verdict::Holds : Verdict::Fails);
      for (long s : failed) r.violations.push_back(ViolationReport::make("lemma1", b, s, 0, 0));
    }
    for (long k = 2; k <= 30; ++k) {
      bool all_zero = true;
      for (long s = 1; s < k; ++s) {
        const BigInt v = falling_factorial_sum(k, s);
        if (v != 0) {
          all_zero = false;
          r.violations.push_back(ViolationReport::make("lemma1-falling", k, s, Rational(v), 0));
        }
      }
      row("lemma1-falling", k, 0, all_zero ? Verdict::Holds : Verdict::Fails);
    }
  }
  return r;
}

// --- poisson -------------------------------------------------------------------------

Report poisson(const RunConfig& cfg) {
  const long b_max = pick(cfg.b_max, 300);
  if (b_max > 5000) throw ResourceError("poisson suite limited to b <= 5000");
  const PoissonSuite suite = poisson_suite(b_max, cfg.precision, cfg.workers);
  Report r;
  r.meta["command"] = "poisson";
  r.meta["b_max"] = std::to_string(b_max);
  r.meta["beta_bound_attained_at_b1"] = beta_bound_attained_at_one() ? "true" : "false";
  r.columns = {"claim_id", "b", "verdict", "digits", "y", "alpha", "beta"};
  for (const auto& c : suite.checks) {
    const PoissonSummary& s = suite.summaries[ul(c.b - 1)];
    const bool have = s.b == c.b;
    r.add_row({"poisson-" + c.claim_id, std::to_string(c.b), verdict_name(c.verdict), std::to_string(c.digits),
               have ? interval_text(s.y) : "", have ? interval_text(s.alpha) : "",
               have ? interval_text(s.beta) : ""});
    if (c.verdict == Verdict::Inconclusive) ++r.inconclusive;
    if (c.verdict == Verdict::Fails) {
      r.violations.push_back(ViolationReport::make("poisson-" + c.claim_id, c.b, 0, s.y.lo, s.y.hi));
    }
  }
  return r;
}

// --- certify ---------------------------------------------------------------------------

void add_certificate(Report& r, InequalityCertificate cert) {
  std::string notes;
  for (size_t i = 0; i < cert.notes.size(); ++i) notes += (i ? "; " : "") + cert.notes[i];
  r.add_row({cert.claim_id, cert.range, cert_status_name(cert.status), std::to_string(cert.points_checked),
             std::to_string(cert.inconclusive_points), std::to_string(cert.witnesses.size()), notes});
  if (cert.witnesses.empty() && cert.inconclusive_points > 0) r.inconclusive += cert.inconclusive_points;
  add_violations(r, std::move(cert.witnesses));
}

Report certify(const RunConfig& cfg) {
  Report r;
  r.meta["command"] = "certify";
  r.meta["target"] = cfg.target;
  r.columns = {"claim_id", "range", "status", "points", "inconclusive", "witnesses", "notes"};
  const int w = cfg.workers;
  if (cfg.target == "appendix-b") {
    for (auto& c : check_appendix_b(cfg.precision)) add_certificate(r, std::move(c));
  } else if (cfg.target == "appendix-c") {
    const long n_hi = pick(cfg.n_max, 157);
    const long b_hi = pick(cfg.b_max, 10000);
    add_certificate(r, check_small_b(RangeSpec::small_band(6, 39, n_hi), w));
    add_certificate(r, check_small_b_sufficient(39, b_hi, w));
    add_certificate(r, check_r_positive(n_hi));
    add_certificate(r, check_medium(RangeSpec::medium_band(6, 19), w));
    add_certificate(r, check_medium_polynomial(19, b_hi));
    add_certificate(r, check_above_half(5, 1000));
    add_certificate(r, check_above_half_direct(60, w));
  } else if (cfg.target == "root-bounds") {
    for (auto& c : check_root_bounds(pick(cfg.b_max, 10000))) add_certificate(r, std::move(c));
  } else if (cfg.target == "exp-bounds") {
    const long n_max = pick(cfg.n_max, 2000);
    if (n_max > 4000) throw ResourceError("exp-bounds limited to n <= 4000");
    add_certificate(r, check_exp_bound_first(n_max, w));
    add_certificate(r, check_exp_bound_second(n_max, w));
  } else if (cfg.target == "z-lowerbound") {
    add_certificate(r, check_z_lowerbound(1, pick(cfg.b_max, 15), pick(cfg.n_max, 100), w));
  } else {
    throw DomainError("unknown certify target '" + cfg.target + "'");
  }
  return r;
}

// --- smalldev ----------------------------------------------------------------------------

Report smalldev(const RunConfig& cfg) {
  Report r;
  r.meta["command"] = "smalldev";
  r.meta["target"] = cfg.target;
  if (cfg.target == "samuels") {
    r.columns = {"claim_id", "range", "status", "points", "inconclusive", "witnesses", "notes"};
    add_certificate(r, verify_samuels(pick(cfg.n_max, 200), cfg.workers));
  } else if (cfg.target == "conjecture") {
    const long n_max = pick(cfg.n_max, 20);
    if (n_max > 60) throw ResourceError("conjecture scan limited to n <= 60");
    r.meta["grid_step"] = fraction_string(cfg.grid_step);
    r.columns = {"claim_id", "n", "points", "violations", "equalities", "family_points", "off_family",
                 "reduction_failures", "oracle_checked", "oracle_mismatches", "minimum", "minimum_ok"};
    for (long n = 1; n <= n_max; ++n) {
      ConjectureScan s = conjecture_scan(n, cfg.grid_step, cfg.workers);
      long off = 0;
      std::set<Rational> witnessed;
      for (const auto& e : s.equalities) {
        if (on_equality_family(e.alpha, e.beta, n)) {
          witnessed.insert(e.beta);
        } else {
          ++off;
          r.violations.push_back(ViolationReport::make("conjecture-equality-off-family", e.b, n, e.alpha, e.beta));
        }
      }
      long family = 0;
      for (Rational beta = 1 + s.step; beta <= n + 2; beta += s.step) {
        if (!on_equality_family(0, beta, n)) continue;
        ++family;
        if (!witnessed.count(beta)) {
          r.violations.push_back(ViolationReport::make("conjecture-equality-missing", 0, n, 0, beta));
        }
      }
      const Rational expected = rpow(make_rational(n, n + 1), ul(n));
      const bool min_ok = s.minimum == expected && s.minimum_alpha == 0 && s.minimum_beta == n + 1;
      if (!min_ok) r.violations.push_back(ViolationReport::make("samuels-minimum", 0, n, s.minimum, expected));
      r.add_row({"conjecture", std::to_string(n), std::to_string(s.points), std::to_string(s.violations.size()),
                 std::to_string(s.equalities.size()), std::to_string(family), std::to_string(off),
                 std::to_string(s.reduction_failures.size()), std::to_string(s.oracle_checked),
                 std::to_string(s.oracle_mismatches.size()), fraction_string(s.minimum), min_ok ? "true" : "false"});
      add_violations(r, std::move(s.violations));
      add_violations(r, std::move(s.reduction_failures));
      add_violations(r, std::move(s.oracle_mismatches));
    }
  } else if (cfg.target == "monotonicity") {
    const long n_max = pick(cfg.n_max, 100);
    MonotonicityScan s = tilde_p_monotonicity_scan(cfg.c, n_max, cfg.workers);
    r.meta["c"] = fraction_string(cfg.c);
    // Open statement: decreases are listed in meta, not asserted.
    r.meta["decreases"] = std::to_string(s.decreases.size());
    r.columns = {"claim_id", "b", "n", "sign"};
    for (const auto& row : s.rows) {
      r.add_row({"tilde_p-diff", std::to_string(row.b), std::to_string(row.n), sign_text(row.sign)});
    }
  } else {
    throw DomainError("unknown smalldev target '" + cfg.target + "'");
  }
  return r;
}

// --- report-merge ----------------------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Report load_report(const std::string& path) {
  if (ends_with(path, ".json")) return Report::from_json(slurp(path));
  Report r = Report::from_csv(slurp(path));
  std::ifstream side(path + ".violations.csv");
  if (side) r.violations = Report::violations_from_csv(slurp(path + ".violations.csv"));
  return r;
}

Report report_merge(const RunConfig& cfg) {
  if (cfg.inputs.empty()) throw DomainError("report-merge needs input reports");
  Report r;
  r.meta["command"] = "report-merge";
  r.meta["inputs"] = std::to_string(cfg.inputs.size());
  for (size_t i = 0; i < cfg.inputs.size(); ++i) {
    Report part = load_report(cfg.inputs[i]);
    if (i == 0) {
      r.columns = part.columns;
    } else if (part.columns != r.columns) {
      throw DomainError("column mismatch in " + cfg.inputs[i]);
    }
    for (auto& row : part.rows) r.add_row(std::move(row));
    r.inconclusive += part.inconclusive;
    add_violations(r, std::move(part.violations));
  }
  // (n, b) order when both columns exist; whole-row order breaks ties
  auto col = [&](const char* name) -> long {
    auto it = std::find(r.columns.begin(), r.columns.end(), name);
    return it == r.columns.end() ? -1 : static_cast<long>(it - r.columns.begin());
  };
  const long nc = col("n");
  const long bc = col("b");
  auto key = [](const std::vector<std::string>& row, long c) -> long {
    if (c < 0 || static_cast<size_t>(c) >= row.size()) return 0;
    try {
      return std::stol(row[static_cast<size_t>(c)]);
    } catch (const std::exception&) {
      return 0;
    }
  };
  std::sort(r.rows.begin(), r.rows.end(), [&](const auto& x, const auto& y) {
    const auto kx = std::make_pair(key(x, nc), key(x, bc));
    const auto ky = std::make_pair(key(y, nc), key(y, bc));
    return kx != ky ? kx < ky : x < y;
  });
  finish(r);
  r.violations.erase(std::unique(r.violations.begin(), r.violations.end()), r.violations.end());
  return r;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

Report execute(const RunConfig& cfg) {
  if (cfg.workers < 1) throw DomainError("--workers must be at least 1");
  Report r;
  switch (cfg.command) {
    case Command::ScanP: r = scan_p(cfg); break;
    case Command::ScanZ: r = scan_z(cfg); break;
    case Command::Threshold: r = threshold(cfg); break;
    case Command::Verify: r = verify(cfg); break;
    case Command::Poisson: r = poisson(cfg); break;
    case Command::Certify: r = certify(cfg); break;
    case Command::SmallDev: r = smalldev(cfg); break;
    case Command::ReportMerge: r = report_merge(cfg); break;
  }
  finish(r);
  return r;
}

int exit_code_for(const Report& report) {
  if (!report.violations.empty()) return kExitViolations;
  if (report.inconclusive > 0) return kExitInconclusive;
  return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    report = execute(cfg);
  } catch (const ResourceError& e) {
    err << "resource guard: " << e.what() << '\n';
    return kExitResource;
  } catch (const DomainError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  }
  const std::string body = cfg.format == OutputFormat::Json ? report.to_json() : report.to_csv();
  if (cfg.out_path.empty()) {
    out << body;
  } else {
    write_atomically(cfg.out_path, body);
    if (cfg.format == OutputFormat::Csv) write_atomically(cfg.out_path + ".violations.csv", report.violations_to_csv());
  }
  err << "rows: " << report.rows.size() << ", violations: " << report.violations.size()
      << ", inconclusive: " << report.inconclusive << '\n';
  return exit_code_for(report);
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of binomial and Poisson median inequalities"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  RunConfig cfg;
  std::string format = "csv";
  std::string claims;
  std::string grid_step = "1/20";
  std::string c_text = "1";
  int digits = cfg.precision.digits;
  int escalations = cfg.precision.max_escalations;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "output path (default: stdout)");
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--digits", digits, "decimal digits for floating paths")->check(CLI::Range(10, 100000));
    sub->add_option("--escalations", escalations, "precision doublings allowed")->check(CLI::Range(0, 10));
  };

  auto* scan_p_cmd = app.add_subcommand("scan-p", "p_{b+1,n} - p_{b,n} sign map");
  common(scan_p_cmd);
  scan_p_cmd->add_option("--n-max", cfg.n_max, "largest n (default 300)");

  auto* scan_z_cmd = app.add_subcommand("scan-z", "exact z_{b+1,n} - z_{b,n} sign map");
  common(scan_z_cmd);
  scan_z_cmd->add_option("--n-max", cfg.n_max, "largest n (default 200, at most 2000)");
  scan_z_cmd->add_option("--b-max", cfg.b_max, "largest b listed");

  auto* threshold_cmd = app.add_subcommand("threshold", "lower sign flip of z differences for large n");
  common(threshold_cmd);
  threshold_cmd->add_option("--n", cfg.n, "n (at least 10^4)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "identity suites");
  common(verify_cmd);
  verify_cmd->add_option("--claims", claims, "comma list of 1,2,3,4,5,lemma1 (default all)");
  verify_cmd->add_option("--n-max", cfg.n_max, "largest n for claims 1-3 (default 60)");
  verify_cmd->add_option("--b-max", cfg.b_max, "largest b for lemma1 / claim 4 (default 200)");

  auto* poisson_cmd = app.add_subcommand("poisson", "y, alpha, beta enclosure suite");
  common(poisson_cmd);
  poisson_cmd->add_option("--b-max", cfg.b_max, "largest b (default 300)");

  auto* certify_cmd = app.add_subcommand("certify", "finite-range inequality certificates");
  common(certify_cmd);
  certify_cmd->add_option("target", cfg.target)
      ->required()
      ->check(CLI::IsMember({"appendix-b", "appendix-c", "root-bounds", "exp-bounds", "z-lowerbound"}));
  certify_cmd->add_option("--n-max", cfg.n_max, "largest n");
  certify_cmd->add_option("--b-max", cfg.b_max, "largest b");

  auto* smalldev_cmd = app.add_subcommand("smalldev", "small deviations reduction");
  common(smalldev_cmd);
  smalldev_cmd->add_option("target", cfg.target)
      ->required()
      ->check(CLI::IsMember({"samuels", "conjecture", "monotonicity"}));
  smalldev_cmd->add_option("--n-max", cfg.n_max, "largest n");
  smalldev_cmd->add_option("--grid-step", grid_step, "grid step P/Q (default 1/20)");
  smalldev_cmd->add_option("--c", c_text, "c for the monotonicity scan (default 1)");

  auto* merge_cmd = app.add_subcommand("report-merge", "merge reports with equal columns");
  common(merge_cmd);
  merge_cmd->add_option("inputs", cfg.inputs, "report files")->required();

  const std::vector<std::pair<CLI::App*, Command>> table = {
      {scan_p_cmd, Command::ScanP},       {scan_z_cmd, Command::ScanZ},     {threshold_cmd, Command::Threshold},
      {verify_cmd, Command::Verify},      {poisson_cmd, Command::Poisson},  {certify_cmd, Command::Certify},
      {smalldev_cmd, Command::SmallDev},  {merge_cmd, Command::ReportMerge}};

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  for (const auto& [sub, command] : table) {
    if (sub->parsed()) cfg.command = command;
  }
  try {
    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    cfg.precision = PrecisionPolicy(digits, escalations, cfg.precision.guard_exponent);
    cfg.claims = split_list(claims);
    cfg.grid_step = parse_rational(grid_step);
    cfg.c = parse_rational(c_text);
  } catch (const std::exception& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(cfg, out, err);
}

}  // namespace rambin
