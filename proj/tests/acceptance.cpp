// Acceptance gate: one line per published property check, with the wall-time
// ceiling each one must satisfy. Checks 1-11 run in-process; check 12 runs
// the installed command twice and compares bytes, which is the published
// determinism contract. Exits nonzero iff any line fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "pgrouplab/suite.hpp"

#ifndef PGROUPLAB_CLI
#error "PGROUPLAB_CLI must name the command-line binary"
#endif

namespace {

// Ceilings in seconds for checks 1..11; the run as a whole stays under 300.
constexpr double kCeiling[11] = {1, 10, 30, 60, 60, 30, 10, 10, 20, 60, 60};
constexpr double kTotalCeiling = 300;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  using pgrouplab::SuiteOptions;
  using pgrouplab::SuiteReport;

  int failed = 0;
  double total = 0;

  for (int id = 1; id <= 11; ++id) {
    SuiteOptions opts;
    opts.only = id;
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport rep = run_suite(opts);
    const double secs = seconds_since(start);
    total += secs;

    const pgrouplab::CriterionResult& r = rep.results.at(0);
    const bool in_time = secs < kCeiling[id - 1];
    const bool ok = r.passed && in_time;
    failed += ok ? 0 : 1;
    std::printf("[%s] %2d %-34s checks=%-8llu %6.2fs (ceiling %gs)\n", ok ? "PASS" : "FAIL", id,
                r.name.c_str(), static_cast<unsigned long long>(r.checks), secs, kCeiling[id - 1]);
    if (!r.passed) std::printf("       %s\n", r.detail.c_str());
    if (!in_time) std::printf("       exceeded the time ceiling\n");
  }

  {
    const auto start = std::chrono::steady_clock::now();
    const std::filesystem::path dir = std::filesystem::temp_directory_path();
    const std::string a = (dir / "pgrouplab-suite-a.json").string();
    const std::string b = (dir / "pgrouplab-suite-b.json").string();
    const std::string cli = PGROUPLAB_CLI;
    const int rc1 = std::system((cli + " suite --json > \"" + a + "\"").c_str());
    const int rc2 = std::system((cli + " suite --json > \"" + b + "\"").c_str());
    const std::string bytes_a = slurp(a);
    const double secs = seconds_since(start);
    total += secs;

    const bool ok = rc1 == 0 && rc2 == 0 && !bytes_a.empty() && bytes_a == slurp(b) &&
                    total < kTotalCeiling;
    failed += ok ? 0 : 1;
    std::printf("[%s] 12 %-34s checks=%-8d %6.2fs (total %.2fs, ceiling %gs)\n",
                ok ? "PASS" : "FAIL", "deterministic-replay", 1, secs, total, kTotalCeiling);
    if (rc1 != 0 || rc2 != 0) std::printf("       suite command exited nonzero\n");
    if (bytes_a.empty() || bytes_a != slurp(b))
      std::printf("       the two runs rendered different bytes\n");
    if (total >= kTotalCeiling) std::printf("       exceeded the total time ceiling\n");
  }

  std::printf("%s\n", failed == 0 ? "all acceptance checks passed" : "acceptance checks FAILED");
  return failed == 0 ? 0 : 1;
}
