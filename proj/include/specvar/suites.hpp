#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "specvar/bounds.hpp"

namespace specvar {

struct ExperimentConfig {
  std::string suite = "all";
  int trials = 100;
  std::uint64_t masterSeed = 0;
  int n = 0;  ///< 0 lets each suite draw its own dimensions
  std::optional<double> epsilon;
  std::optional<double> targetNormA;
  ConstantChoice constant;
  int threads = 1;

  /// Throws ConfigError for unknown suites, trials < 1, eps < 0 or a target
  /// norm outside (0, 1).
  void validate() const;
};

/// Names accepted by run_suite, "all" included.
const std::vector<std::string>& suite_names();

/// Number of slack histogram bins; bin 0 collects slack <= 1e-16, bin k
/// collects [1e-16 * 10^{k-1}, 1e-16 * 10^k), the last bin everything above.
inline constexpr int kSlackBins = 20;

struct CheckStats {
  std::string suite;
  std::string check;
  std::size_t count = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  double min_slack = 0.0;  ///< valid when count > 0
  std::vector<std::size_t> histogram = std::vector<std::size_t>(kSlackBins, 0);
};

struct Violation {
  std::string suite;
  std::string check;
  int trial = 0;
  std::uint64_t seed = 0;
  nlohmann::json detail;  ///< inputs needed to replay the failing check
};

struct SuiteReport {
  ExperimentConfig config;
  std::vector<CheckStats> checks;
  std::vector<Violation> violations;
  double wall_seconds = 0.0;  ///< not serialized, so reports stay reproducible

  std::size_t total_violations() const;
};

/// Runs the named suite with per-trial seeds derived from the master seed;
/// trials may execute on several threads and aggregate order-independently.
SuiteReport run_suite(const ExperimentConfig& cfg);

nlohmann::json to_json(const ExperimentConfig& cfg);
nlohmann::json to_json(const SuiteReport& report);

/// One line per check, for humans.
std::string summarize(const SuiteReport& report);

}  // namespace specvar
