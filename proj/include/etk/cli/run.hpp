#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "etk/core/report.hpp"

namespace etk::cli {

enum class Format { json, text };

struct RunConfig {
  std::string group;  // "builtin:NAME" or a group file path
  unsigned prime = 2;
  unsigned field_degree = 0;
  std::uint64_t seed = 1;
  unsigned tensor_power = 0;
  std::size_t tensor_budget = 1000;
  Format format = Format::json;
  bool check_theorem = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDiscrepancy = 2;

/// Runs one analysis and writes the report to out; diagnostics go to err.
/// Returns 0 on success, 2 on a theorem-check discrepancy, 1 on error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// The JSON form of a report (schema 1), with optional sections.
std::string report_json(const core::KReport& r, const core::TheoremCheck* check, const std::string* check_label);
std::string report_text(const core::KReport& r, const core::TheoremCheck* check, const std::string* check_label);

}  // namespace etk::cli
