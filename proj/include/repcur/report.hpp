#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "repcur/verify.hpp"

namespace repcur {

using Json = nlohmann::ordered_json;

inline Json check_to_json(const CheckReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return Json{{"check_name", r.check_name},
              {"parameters", std::move(params)},
              {"status", r.pass ? "pass" : "fail"},
              {"expected", r.expected},
              {"actual", r.actual},
              {"runtime_ms", r.runtime_ms}};
}

/// {"version": 1, "config": {...}, "checks": [...]}. Config values are
/// strings, like every other payload.
inline Json build_report(const std::vector<std::pair<std::string, std::string>>& config,
                         const std::vector<CheckReport>& checks) {
  Json cfg = Json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(check_to_json(c));
  return Json{{"version", 1}, {"config", std::move(cfg)}, {"checks", std::move(arr)}};
}

/// Copy of a report with every runtime_ms zeroed, for determinism comparisons.
inline Json without_runtimes(Json report) {
  for (auto& c : report["checks"]) c["runtime_ms"] = 0;
  return report;
}

/// One line per check: status, name, parameters, expected and actual.
inline std::string summary_line(const CheckReport& r) {
  std::string s = r.pass ? "PASS " : "FAIL ";
  s += r.check_name;
  for (const auto& [k, v] : r.parameters) s += " " + k + "=" + v;
  s += " expected=" + r.expected + " actual=" + r.actual;
  s += " (" + std::to_string(r.runtime_ms) + " ms)";
  return s;
}

}  // namespace repcur
