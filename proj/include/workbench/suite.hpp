#pragma once

#include <optional>
#include <string>
#include <vector>

#include "workbench/report.hpp"

namespace wb::workbench {

// {"schema": 1, "checks": [...], "seed": N, "tol": X, "kmax": K, "options": {check: {...}}}
struct SuiteConfig {
  std::vector<std::string> checks;
  std::uint64_t seed = 20240611;
  std::optional<double> tol;
  std::optional<int> kmax;
  Json options = Json::object();

  // Throws Error(Errc::usage) naming the offending JSON pointer.
  static SuiteConfig from_json(const Json& j);
  static SuiteConfig defaults();
  Json to_json() const;
  Json options_for(const std::string& check) const;
};

const std::vector<std::string>& known_checks();

CheckResult run_check(const std::string& name, const SuiteConfig& config);
RunReport run_suite(const SuiteConfig& config, std::vector<std::string> command = {});

}  // namespace wb::workbench
