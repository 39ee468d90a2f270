#pragma once

// Verification suites. Every check carries the number of the acceptance
// criterion it belongs to, the expected and computed values as text, and its
// wall-clock time.

#include <string>
#include <vector>

#include "poplab/vendor_json.hpp"

namespace poplab {

struct Check {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string expected;
  std::string computed;
  double millis = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  double millis = 0;

  bool passed() const;
  /// Timings are left out unless asked for, so the output is reproducible.
  nlohmann::json to_json(bool timings = false) const;
  std::string to_text(bool timings = false) const;
};

struct SuiteOptions {
  int jobs = 1;
  bool slow = false;  // adds the n = 9 open-problem values
};

/// Suite names in run order; "all" runs each of them.
std::vector<std::string> suite_names();
/// Throws poplab::Error on an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace poplab
