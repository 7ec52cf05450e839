#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace e8 {

struct RunConfig {
  std::string suite = "all";
  std::string backend;  // "exact", "approx", or empty for the per-suite default
  double tol = 1e-9;
  uint64_t seed = 0;
  int samples = -1;  // -1 selects each check's default sample count
  std::string format = "json";
  std::string out;
};

struct CheckResult {
  std::string id;
  std::string anchor;
  std::string quote;
  std::string status;  // "pass" or "fail"
  std::string expected;
  std::string actual;
};

struct Report {
  RunConfig config;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  int passed() const;
  int failed() const;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_names();

// Throws ConfigError for unknown suites, backends, formats or bad numbers,
// and for the exact backend combined with the orbit suite.
void validate(const RunConfig& cfg);

Report run(const RunConfig& cfg);

std::string report_json(const Report& r);
std::string report_markdown(const Report& r);

// 0 when every check passes, 1 otherwise.
int exit_code(const Report& r);

}  // namespace e8
