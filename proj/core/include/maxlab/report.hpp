#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace maxlab {

struct TrialResult {
  int trial = 0;
  double constant = 0.0;
  std::optional<double> bound;  // empty for bound-free suites
  bool pass = true;
};

/// Structured outcome of one verification suite. All scientific content is a
/// deterministic function of the echoed config; runtime_ms is wall clock.
struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> config;  // ordered key=value echo
  std::vector<TrialResult> per_trial;
  double worst_case = 0.0;
  std::optional<double> bound;
  bool pass = false;
  std::vector<std::string> witnesses;  // compact JSON fragments
  std::int64_t runtime_ms = 0;
};

std::string report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

/// Writes <suite>-<seed>.json and <suite>-<seed>.csv into outdir (the seed is
/// read from the config echo). Returns the JSON path.
std::filesystem::path emit_report(const VerificationReport& report,
                                  const std::filesystem::path& outdir);

/// Canonical shortest round-trip decimal formatting used everywhere a double
/// lands in a report, so identical runs emit identical bytes.
std::string format_double(double v);

}  // namespace maxlab
