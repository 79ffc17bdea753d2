#ifndef RAMBIN_CLI_HPP
#define RAMBIN_CLI_HPP

#include "rambin/numeric.hpp"
#include "rambin/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rambin {

enum class Command { ScanP, ScanZ, Threshold, Verify, Poisson, Certify, SmallDev, ReportMerge };
enum class OutputFormat { Csv, Json };

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitResource = 70;

struct RunConfig {
  Command command = Command::ScanP;
  std::string target;              // certify / smalldev suite
  long n_max = 0;                  // 0 picks the per-command default
  long b_max = 0;
  long n = 0;                      // threshold
  std::vector<std::string> claims; // verify; empty means all
  Rational grid_step = Rational(1) / 20;
  Rational c = 1;
  PrecisionPolicy precision;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;            // empty writes to the output stream
  int workers = 1;
  std::vector<std::string> inputs; // report-merge
};

// Builds the report for one run. Throws DomainError on bad parameters and
// ResourceError when a cost guard trips.
Report execute(const RunConfig& config);

// 1 with violations, else 2 with inconclusives, else 0.
int exit_code_for(const Report& report);

// Executes, writes the report (atomically when out_path is set; CSV output
// also writes PATH.violations.csv) and returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Flag parsing plus run(); usage errors give 64.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rambin

#endif
