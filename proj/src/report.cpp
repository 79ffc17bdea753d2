#include "rambin/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace rambin {

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

ViolationReport ViolationReport::make(std::string claim_id, long b, long n, const Rational& lhs,
                                      const Rational& rhs) {
  return ViolationReport{std::move(claim_id), b, n, decimal_string(lhs), decimal_string(rhs),
                         fraction_string(lhs), fraction_string(rhs)};
}

bool report_order(const ViolationReport& a, const ViolationReport& b) {
  return std::tie(a.n, a.b, a.claim_id, a.lhs_raw) < std::tie(b.n, b.b, b.claim_id, b.lhs_raw);
}

void Report::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::logic_error("report row width mismatch");
  rows.push_back(std::move(row));
}

std::string Report::to_csv() const {
  std::ostringstream out;
  for (size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_escape(columns[i]);
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << '\n';
  }
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta) doc["meta"][k] = v;
  doc["meta"]["inconclusive"] = inconclusive;
  doc["results"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    for (size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
    doc["results"].push_back(std::move(obj));
  }
  doc["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    doc["violations"].push_back({{"claim_id", v.claim_id},
                                 {"b", v.b},
                                 {"n", v.n},
                                 {"lhs", v.lhs},
                                 {"rhs", v.rhs},
                                 {"lhs_raw", v.lhs_raw},
                                 {"rhs_raw", v.rhs_raw}});
  }
  return doc.dump(2) + "\n";
}

Report Report::from_csv(const std::string& text) {
  Report r;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV report");
  r.columns = csv_split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    r.add_row(csv_split(line));
  }
  return r;
}

Report Report::from_json(const std::string& text) {
  auto doc = nlohmann::ordered_json::parse(text);
  Report r;
  for (const auto& [k, v] : doc.at("meta").items()) {
    if (k == "inconclusive") {
      r.inconclusive = v.get<long>();
    } else {
      r.meta[k] = v.get<std::string>();
    }
  }
  const auto& results = doc.at("results");
  if (!results.empty()) {
    for (const auto& [k, v] : results.front().items()) r.columns.push_back(k);
  }
  for (const auto& obj : results) {
    std::vector<std::string> row;
    for (const auto& c : r.columns) row.push_back(obj.at(c).get<std::string>());
    r.add_row(std::move(row));
  }
  for (const auto& v : doc.at("violations")) {
    r.violations.push_back(ViolationReport{v.at("claim_id"), v.at("b"), v.at("n"), v.at("lhs"),
                                           v.at("rhs"), v.at("lhs_raw"), v.at("rhs_raw")});
  }
  return r;
}

std::string Report::violations_to_csv() const {
  std::ostringstream out;
  out << kViolationColumns << '\n';
  for (const auto& v : violations) {
    out << csv_escape(v.claim_id) << ',' << v.b << ',' << v.n << ',' << csv_escape(v.lhs) << ','
        << csv_escape(v.rhs) << ',' << csv_escape(v.lhs_raw) << ',' << csv_escape(v.rhs_raw) << '\n';
  }
  return out.str();
}

std::vector<ViolationReport> Report::violations_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kViolationColumns) throw std::runtime_error("bad violations header");
  std::vector<ViolationReport> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = csv_split(line);
    if (f.size() != 7) throw std::runtime_error("bad violations row: " + line);
    out.push_back(ViolationReport{f[0], std::stol(f[1]), std::stol(f[2]), f[3], f[4], f[5], f[6]});
  }
  return out;
}

void write_atomically(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace rambin
