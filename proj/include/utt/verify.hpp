#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "utt/padic.hpp"

// Named verification suites. Each check carries the anchor string of the
// identity it exercises, its parameters and a pass/fail verdict.
namespace utt::verify {

struct SuiteConfig {
  std::int64_t p = 3;
  std::int64_t q = 2;
  int precision = 20;
  int window = 12;
  std::uint64_t seed = 0;
  int kmax = 8;
  int nmax = 8;
  int trials = 50;
};

struct CheckResult {
  std::string suite;
  std::string anchor;
  std::string check;
  nlohmann::json params;
  bool passed = false;
  std::string detail;

  /// One canonical JSON line (sorted keys, no whitespace).
  std::string to_json_line() const;
};

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Anchors `all` is expected to report.
const std::vector<std::string>& expected_anchors();

/// Validates the configuration (context, W >= nmax + 2, N large enough for
/// kmax) and throws the corresponding Error.
const PadicContext& validate(const SuiteConfig& cfg);

/// Runs one suite; BadIndex for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name,
                                   const SuiteConfig& cfg);

/// Runs the named suites ("all" expands to every suite) concurrently and
/// hands results to sink in suite order, so output is deterministic.
/// Returns true when every check passed.
bool run_suites(const std::vector<std::string>& names, const SuiteConfig& cfg,
                const std::function<void(const CheckResult&)>& sink);

/// Per-trial seed derived from the run seed (splitmix64 of seed and index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace utt::verify
