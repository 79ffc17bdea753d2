#ifndef RAMBIN_REPORT_HPP
#define RAMBIN_REPORT_HPP

#include "rambin/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace rambin {

// A checked inequality that failed at (b, n). `lhs_raw`/`rhs_raw` hold the
// exact "num/den" strings; the decimal renderings are for display.
struct ViolationReport {
  std::string claim_id;
  long b = 0;
  long n = 0;
  std::string lhs;
  std::string rhs;
  std::string lhs_raw;
  std::string rhs_raw;

  static ViolationReport make(std::string claim_id, long b, long n, const Rational& lhs,
                              const Rational& rhs);
  bool operator==(const ViolationReport&) const = default;
};

// Orders by (n, b, claim_id) so merged reports are deterministic.
bool report_order(const ViolationReport& a, const ViolationReport& b);

// Tabular result with a fixed column set per producer.
struct Report {
  std::map<std::string, std::string> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<ViolationReport> violations;
  long inconclusive = 0;

  void add_row(std::vector<std::string> row);
  [[nodiscard]] std::string to_csv() const;
  [[nodiscard]] std::string to_json() const;

  static Report from_csv(const std::string& text);
  static Report from_json(const std::string& text);

  // CSV reports keep violations in a sibling file with this header.
  [[nodiscard]] std::string violations_to_csv() const;
  static std::vector<ViolationReport> violations_from_csv(const std::string& text);
};

inline const char* kViolationColumns = "claim_id,b,n,lhs,rhs,lhs_raw,rhs_raw";

// Writes to a sibling temporary and renames it into place.
void write_atomically(const std::string& path, const std::string& contents);

}  // namespace rambin

#endif
