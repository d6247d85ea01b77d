#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bslab::verify {

enum class Level { Pass, Warn, Fail };

struct ReportLine {
  Level level;
  std::string name;
  std::string detail;
};

struct Options {
  unsigned threads = 2;
  // Scale knobs; defaults are the full acceptance configuration.
  long long class_number_limit = 10000; // |D| cap, form count vs analytic
  long long residue_limit = 10000;      // |D| cap, rho vs L(1,chi)
  long long siegel_small_lo = 9'000, siegel_small_hi = 10'000;
  long long siegel_big_lo = 900'000, siegel_big_hi = 1'000'000;
  long long scan_limit = 500;           // zero scan covers -scan_limit <= D < 0
  std::uint32_t mellin_small_X = 10'000, mellin_big_X = 1'000'000;
  std::uint32_t convolution_cutoff = 10'000;
  std::size_t nesting_grid = 1000;
  std::size_t scan_grid = 64;
};

// Check names in fixed execution order.
const std::vector<std::string>& check_names();

std::vector<ReportLine> run_check(const std::string& name, const Options& opt);

struct Report {
  std::vector<ReportLine> lines;
};

Report run_suite(const std::vector<std::string>& names, const Options& opt);

std::string render(const Report& report);
bool all_passed(const Report& report);

// Runs the whole suite twice and byte-compares the rendered reports; the
// comparison is reported as the final `report-determinism` line.
struct FullRun {
  std::string text;
  bool passed;
};
FullRun run_full(const Options& opt);

} // namespace bslab::verify
