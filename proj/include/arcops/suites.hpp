#ifndef ARCOPS_SUITES_HPP
#define ARCOPS_SUITES_HPP

#include <functional>
#include <string>
#include <vector>

namespace arcops {

// Named verification suites mirroring the acceptance criteria one to one.
// Every check is exact; a failure carries a serialized counterexample.

struct CheckResult {
  std::string name;
  bool pass = true;
  long long instances = 0;
  std::string counterexample; // empty when passing
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct SuiteOptions {
  // small keeps corpora at the acceptance sizes; full widens a few samples
  bool small_corpus = true;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});
std::vector<SuiteReport> run_all_suites(const SuiteOptions& opt = {});

std::string report_to_json(const std::vector<SuiteReport>& reports);

} // namespace arcops

#endif
