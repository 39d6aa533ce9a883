#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace freepi {

struct VerifyOptions {
  std::uint64_t seed = 20261016;
  /// Directory holding print_cases.tsv; the golden check is skipped (and
  /// the round-trip suite fails) when empty.
  std::string golden_dir;
};

struct SuiteResult {
  std::string name;
  int criterion = 0;
  bool checks_passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;

  bool within_budget() const { return seconds < budget_seconds; }
  bool passed() const { return checks_passed && within_budget(); }
};

/// Suite names in criterion order.
std::vector<std::string> suite_names();

/// Runs one named suite. Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

/// "PASS [3] component-identities  12.3s/60s  <detail>"
std::string format_result(const SuiteResult& r);

}  // namespace freepi
