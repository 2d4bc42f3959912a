#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gwa {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Machine-readable outcome of a verification suite. Serialization order is
/// fixed so that reports for one seed are byte-identical across runs.
struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  unsigned cases = 0;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<CheckResult> checks;
  std::vector<std::string> failures;

  bool pass() const;
  void check(const std::string& name, bool ok, const std::string& detail = "");
  void fail_case(const std::string& counterexample);

  nlohmann::ordered_json to_json() const;
};

}  // namespace gwa
