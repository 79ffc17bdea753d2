#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rambin/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace rambin;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "rambin");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("rambin-cli-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({"scan-p", "--n-max", "40"}).code == kExitOk);
  CHECK(call({"bogus"}).code == kExitUsage);
  CHECK(call({"threshold"}).code == kExitUsage);
  CHECK(call({"scan-p", "--n-max", "5000"}).code == kExitResource);
  CHECK(call({"certify", "nothing"}).code == kExitUsage);
  CHECK(call({"smalldev", "conjecture", "--grid-step", "1/3"}).code == kExitUsage);
  // the b = 5 sandwich counterexample starts at n = 56
  const Outcome v = call({"verify", "--claims", "3", "--n-max", "60"});
  CHECK(v.code == kExitViolations);
  CHECK(call({"verify", "--claims", "1,2,3", "--n-max", "55"}).code == kExitOk);
}

TEST_CASE("exit code precedence") {
  Report r;
  CHECK(exit_code_for(r) == kExitOk);
  r.inconclusive = 3;
  CHECK(exit_code_for(r) == kExitInconclusive);
  r.violations.push_back(ViolationReport::make("x", 1, 2, 0, 1));
  CHECK(exit_code_for(r) == kExitViolations);
}

TEST_CASE("output is deterministic across worker counts") {
  const Outcome one = call({"scan-z", "--n-max", "60", "--workers", "1"});
  const Outcome four = call({"scan-z", "--n-max", "60", "--workers", "4"});
  CHECK(one.code == kExitOk);
  CHECK(one.out == four.out);
  const Outcome j1 = call({"verify", "--claims", "1,2", "--n-max", "30", "--format", "json"});
  const Outcome j2 = call({"verify", "--claims", "1,2", "--n-max", "30", "--format", "json", "--workers", "3"});
  CHECK(j1.out == j2.out);
  const Report parsed = Report::from_json(j1.out);
  CHECK_FALSE(parsed.rows.empty());
}

TEST_CASE("threshold row for a small n via execute") {
  RunConfig cfg;
  cfg.command = Command::Threshold;
  cfg.n = 500;
  CHECK_THROWS_AS(execute(cfg), DomainError);
}

TEST_CASE("files and report-merge round trip") {
  const fs::path dir = scratch_dir();
  const std::string a = (dir / "a.csv").string();
  const std::string b = (dir / "b.csv").string();
  const std::string m = (dir / "m.csv").string();
  CHECK(call({"verify", "--claims", "3", "--n-max", "58", "--out", a}).code == kExitViolations);
  CHECK(call({"verify", "--claims", "1", "--n-max", "20", "--out", b}).code == kExitOk);
  CHECK(fs::exists(a + ".violations.csv"));
  const auto va = Report::violations_from_csv(slurp(a + ".violations.csv"));
  CHECK(va.size() == 3);
  for (const auto& v : va) CHECK(v.b == 5);

  CHECK(call({"report-merge", a, b, "--out", m}).code == kExitViolations);
  const Report merged = Report::from_csv(slurp(m));
  const Report ra = Report::from_csv(slurp(a));
  const Report rb = Report::from_csv(slurp(b));
  CHECK(merged.rows.size() == ra.rows.size() + rb.rows.size());
  CHECK(Report::violations_from_csv(slurp(m + ".violations.csv")) == va);

  // merging is order independent
  const std::string m2 = (dir / "m2.csv").string();
  call({"report-merge", b, a, "--out", m2});
  CHECK(slurp(m) == slurp(m2));

  const std::string j = (dir / "a.json").string();
  CHECK(call({"verify", "--claims", "3", "--n-max", "58", "--format", "json", "--out", j}).code == kExitViolations);
  CHECK(Report::from_json(slurp(j)).violations == va);
  fs::remove_all(dir);
}

TEST_CASE("config file") {
  const fs::path dir = scratch_dir();
  const fs::path ini = dir / "run.ini";
  {
    std::ofstream f(ini);
    f << "[scan-p]\nn-max=30\nformat=json\n";
  }
  const Outcome o = call({"--config", ini.string(), "scan-p"});
  CHECK(o.code == kExitOk);
  CHECK(o.out.find("\"results\"") != std::string::npos);
  CHECK(o.out == call({"scan-p", "--n-max", "30", "--format", "json"}).out);
  fs::remove_all(dir);
}
