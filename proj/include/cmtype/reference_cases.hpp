#pragma once

// Built-in verification cases with known expected values, grouped by name
// prefix (e.g. "type-3-4-5/", "ulrich-3-7/").  Run by `cmtype verify paper`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cmtype {

struct Check {
  std::string quantity;
  std::string expected;
  std::string computed;
  bool pass() const { return expected == computed; }
};

struct CaseResult {
  std::string name;
  std::string description;
  std::vector<Check> checks;
  std::optional<std::string> error;
  long long micros = 0;

  bool pass() const {
    if (error) return false;
    for (const auto& c : checks) {
      if (!c.pass()) return false;
    }
    return !checks.empty();
  }
};

struct SuiteResult {
  std::string filter;
  std::vector<CaseResult> cases;

  int failures() const {
    int n = 0;
    for (const auto& c : cases) n += c.pass() ? 0 : 1;
    return n;
  }
};

std::vector<std::string> reference_case_names();
// Runs every case whose name contains `filter` (all cases for "").
SuiteResult run_reference_cases(std::string_view filter = {});

}  // namespace cmtype
