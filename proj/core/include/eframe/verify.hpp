#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eframe/model.hpp"

namespace eframe::verify {

struct CaseResult {
  std::string case_id;
  std::string inputs;           // short human-readable summary
  double residual = 0.0;
  std::optional<double> bound;  // pass threshold; empty rows are informational
  bool pass = true;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  TruncationConfig truncation;  // effective config the suite ran with
  std::vector<CaseResult> cases;  // sorted by case_id
  double max_residual = 0.0;
  bool all_pass = true;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::string anchor;  // the identity or bound the suite checks
};

/// Stable, ordered suite registry. Construction asserts that every
/// theorem-bearing operation is exercised by at least one suite.
const std::vector<SuiteInfo>& list_suites();

/// Deterministic given (name, cfg). Throws Error for unknown names.
VerificationReport run_suite(std::string_view name, const TruncationConfig& cfg);

/// Every registered suite, in registry order.
std::vector<VerificationReport> run_all_suites(const TruncationConfig& cfg);

}  // namespace eframe::verify
