#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace liouville {

struct CaseResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;

  bool ok() const { return passed == total; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  bool ok() const;
  // One "PASS|FAIL <suite>/<case> <passed>/<total>" line per case.
  std::string to_text() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20260101;
  // Adds a case that is wrong on purpose, to exercise the failure path.
  bool inject_failure = false;
};

SuiteReport run_liouville_suite(const VerifyOptions& options);
SuiteReport run_topology_suite(const VerifyOptions& options);

}  // namespace liouville
