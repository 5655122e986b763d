#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace wb::workbench {

using Json = nlohmann::json;

inline constexpr int schema_version = 1;

struct CheckResult {
  std::string name;
  bool pass = false;
  Json details = Json::object();
  double wall_seconds = 0.0;
};

struct RunReport {
  std::vector<std::string> command;
  Json config = Json::object();
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool pass() const;
  // Timing fields are the only nondeterministic content; omit them for byte-stable output.
  Json to_json(bool timing = true) const;
};

// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& j);

}  // namespace wb::workbench
