#ifndef SIMPLEXPOLY_SWEEP_HPP
#define SIMPLEXPOLY_SWEEP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simplexpoly/operators.hpp"

namespace simplexpoly {

using Tuple = std::vector<Rational>;

struct SuiteConfig {
  int max_n = 0;
  int max_n_general = 0;            // connections: connect_general bound
  std::vector<Tuple> params;        // arity fixed by the suite
  std::vector<Tuple> triangle_params;  // monic and gram: (a, b, c, d)
  std::vector<Rational> xi;         // connections: connect_alpha targets
  std::vector<Tuple> targets;       // connections: (phi, theta, eta, xi)
  std::optional<std::vector<std::string>> relations;  // unset means all
};

struct SweepConfig {
  std::map<std::string, SuiteConfig> suites;
  unsigned threads = 1;
};

// Suites in run order.
const std::vector<std::string>& suite_names();

// Parses the JSON config. A params entry is either a list of tuples or
// {"values": [...]}, meaning every tuple over those values. Numbers may be
// integers or "num/den" strings. Throws ConfigError.
SweepConfig parse_sweep_config(const std::string& text);
SweepConfig load_sweep_config(const std::string& path);

// SIMPLEXPOLY_THREADS overrides the hint when set to a positive integer.
unsigned resolve_threads(unsigned hint);

struct RelationSummary {
  std::string suite;
  std::string relation;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
  // Failed at least once for every sampled parameter tuple it was checked on.
  bool erratum_candidate = false;
};

struct SweepResult {
  std::string suite;
  std::vector<VerificationReport> reports;
  std::vector<RelationSummary> summary;  // sorted by (suite, relation)
  double seconds = 0;

  std::size_t failures() const;
  std::size_t erratum_candidates() const;
  // 0 clean, 2 erratum candidates present, 1 other failures.
  int exit_code() const;
};

// Per-relation counts; tuples[i] is the parameter tuple report i was run on.
std::vector<RelationSummary> summarize_reports(const std::vector<VerificationReport>& reports,
                                               const std::vector<std::size_t>& tuples);

// Throws ConfigError if the suite is unknown or missing from the config.
// Test hook: SIMPLEXPOLY_INJECT_FAILURE=relation[@tuple] marks the passing
// checks of that relation (on that tuple only, if given) as failed.
SweepResult run_suite(const std::string& suite, const SweepConfig& config, unsigned threads);

// Sorted keys; full reports are included when requested, otherwise only
// failing ones.
std::string sweep_json(const SweepResult& result, bool all_reports);
std::string report_json(const VerificationReport& report);

}  // namespace simplexpoly

#endif  // SIMPLEXPOLY_SWEEP_HPP
