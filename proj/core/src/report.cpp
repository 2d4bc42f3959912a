#include "gwa/report.hpp"

namespace gwa {

bool Report::pass() const {
  if (!failures.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::check(const std::string& name, bool ok, const std::string& detail) {
  checks.push_back(CheckResult{name, ok, detail});
  if (!ok && !detail.empty()) failures.push_back(name + ": " + detail);
}

void Report::fail_case(const std::string& counterexample) {
  failures.push_back(counterexample);
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["cases"] = cases;
  if (!meta.empty()) j["meta"] = meta;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["failures"] = failures;
  j["pass"] = pass();
  return j;
}

}  // namespace gwa
