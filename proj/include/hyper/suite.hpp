#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyper/check.hpp"
#include "hyper/inner.hpp"

namespace hyper {

inline constexpr std::string_view kLibraryVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  ModelKind space = ModelKind::Segment;
  double alpha = 0.5;
  EndpointConvention endpoint = EndpointConvention::UpperClosed;
  std::size_t samples = 1000;        // random cases per suite
  std::size_t per_set_samples = 64;  // members drawn from each hyperset
  std::uint64_t seed = 42;
  double eps = 1e-9;

  /// Throws ConfigError on an invalid combination.
  void validate() const;
  HypergroupModel model() const { return HypergroupModel::make(space, alpha, endpoint); }
  HyperIPSpace ip_space() const { return {WeakHVS{model()}}; }
};

struct SuiteSummary {
  std::string id;
  std::string description;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::vector<Witness> witnesses;  // first few failures
};

struct SuiteReport {
  RunConfig config;
  std::vector<SuiteSummary> suites;
  // Probes that are meant to fail; they never affect all_passed().
  std::vector<SuiteSummary> expected_failures;
  double wall_time_ms = 0.0;

  bool all_passed() const;
  const SuiteSummary* find(std::string_view id) const;
};

enum class Execution { Serial, Parallel };

/// Runs every axiom and lemma suite over cfg.samples seeded cases. Each case
/// draws from its own stream derived from (seed, suite, case), so Serial and
/// Parallel produce the same report.
SuiteReport run_suite(const RunConfig& cfg, Execution exec = Execution::Parallel);

/// Versioned JSON report. The wall-time key is omitted when with_wall_time is false.
std::string report_json(const SuiteReport& report, bool with_wall_time = true);

/// Human-readable description of a suite id, echoed in the report.
std::string_view suite_description(std::string_view id);

}  // namespace hyper
