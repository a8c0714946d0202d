#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fincat {

enum class SuiteScope {
  kFast,         // core battery on the built-in catalog
  kExhaustive3,  // adds sweeps over every preorder category on three elements
  kFull,         // adds deeper cross-checks over the same corpus
};

const char* suite_scope_name(SuiteScope scope);
std::optional<SuiteScope> parse_suite_scope(const std::string& name);

struct SuiteCase {
  int criterion = 0;  // battery line the case belongs to; 0 = supplementary
  std::string name;
  bool passed = false;
  std::string detail;  // first failure diagnostic; empty on pass
};

struct SuiteOptions {
  long long budget = 10'000'000;  // search-node budget per case
  int workers = 1;
};

struct SuiteResult {
  std::vector<SuiteCase> cases;
  long long nodes_visited = 0;

  bool all_passed() const {
    for (const auto& c : cases)
      if (!c.passed) return false;
    return true;
  }
};

// Runs the self-check battery: every verdict the library produces on the
// built-in corpus is recomputed by an independent method and compared.
SuiteResult run_suite(SuiteScope scope, const SuiteOptions& opts = {});

}  // namespace fincat
