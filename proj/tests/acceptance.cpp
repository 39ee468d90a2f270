// Runs every verification suite and prints one line per acceptance
// criterion. A criterion passes iff it has checks and all of them pass.

#include <cstring>
#include <iostream>
#include <map>

#include "poplab/suites.hpp"

int main(int argc, char** argv) {
  poplab::SuiteOptions opts;
  for (int i = 1; i < argc; ++i) opts.slow = opts.slow || std::strcmp(argv[i], "--slow") == 0;

  struct Tally {
    int total = 0;
    int failed = 0;
    std::string first_failure;
  };
  std::map<int, Tally> by_criterion;
  for (const auto& name : poplab::suite_names()) {
    const poplab::SuiteReport r = poplab::run_suite(name, opts);
    for (const auto& c : r.checks) {
      Tally& t = by_criterion[c.criterion];
      ++t.total;
      if (!c.passed) {
        if (t.failed++ == 0) t.first_failure = name + ": " + c.name + " (expected " + c.expected + ", computed " + c.computed + ")";
      }
    }
    for (const auto& note : r.notes) std::cout << "note: " << note << '\n';
  }

  bool all = true;
  for (int k = 1; k <= 17; ++k) {
    const Tally& t = by_criterion[k];
    const bool ok = t.total > 0 && t.failed == 0;
    all = all && ok;
    std::cout << "AC" << k << ' ' << (ok ? "PASS" : "FAIL") << ' ' << t.total - t.failed << '/' << t.total << " checks";
    if (t.total == 0) std::cout << ", none registered";
    if (t.failed > 0) std::cout << "; first failure: " << t.first_failure;
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
