#include "workbench/report.hpp"

#include <algorithm>

namespace wb::workbench {

bool RunReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Json RunReport::to_json(bool timing) const {
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    Json row = {{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"details", c.details}};
    if (timing) row["wall_seconds"] = c.wall_seconds;
    list.push_back(row);
  }
  Json j = {{"schema_version", schema_version},
            {"command", command},
            {"config", config},
            {"seed", seed},
            {"checks", list},
            {"status", pass() ? "pass" : "fail"}};
  if (timing) j["wall_seconds"] = wall_seconds;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace wb::workbench
