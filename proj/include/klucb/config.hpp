#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klucb/divergence.hpp"
#include "klucb/environment.hpp"
#include "klucb/exploration.hpp"
#include "klucb/policy.hpp"
#include "klucb/simulator.hpp"

namespace klucb {

// Raised for every malformed configuration; messages carry the offending
// line number when one is known.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// One `key = value` line of a config file, with comments and blank lines
// stripped.
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

std::vector<ConfigEntry> read_config_text(const std::string& text);
std::vector<ConfigEntry> read_config_file(const std::string& path);

// --- grammar pieces (shared by the scenario and check interpreters) -------

// "bernoulli 0.1" | "tpoisson 1.5 10" | "texponential 0.2 10"
// | "gaussian 0 1" | "finite v1:p1,v2:p2,..."
ArmModel parse_arm(const std::string& text);

// "klucb <family[:param]> <schedule>" | "empklucb <schedule>"
// | "ucb" | "ucb-cor2" | "ucbv" | "ucbtuned"
PolicySpec parse_policy(const std::string& text);

// "bernoulli" | "binomial:n" | "poisson" | "negbinomial:r" | "gaussian:s2"
// | "gamma:a" | "quadratic:c"; the parameter is required exactly for the
// families that have one.
Divergence parse_divergence(const std::string& token);

// "logt" | "log3loglog" | "logloglog"
ExplorationSchedule parse_schedule(const std::string& token);

// --- scenario-shaped configs (run and bounds commands) --------------------

struct ScenarioConfig {
  Scenario scenario;                 // checkpoints resolved
  std::vector<PolicySpec> policies;  // nonempty, pairwise distinct names
};

// Keys: horizon (required), replications (default 1), seed (default 1),
// rescale_bound (default: the largest arm max_value; required explicitly
// when some arm is unbounded), arm (repeated, required), policy (repeated,
// required). Unknown or duplicated scalar keys are rejected with their line
// numbers.
ScenarioConfig interpret_scenario(const std::vector<ConfigEntry>& entries);

// Canonical rendering: fixed key order, resolved defaults, one arm/policy
// per line, shortest round-trip numbers. Parsing the canonical text yields
// the same canonical text again.
std::string canonical_text(const ScenarioConfig& config);

// FNV-1a hash of canonical_text; equal for semantically identical configs.
std::uint64_t config_hash(const ScenarioConfig& config);

// --- check-shaped configs (check command) ---------------------------------

struct CheckConfig {
  enum class Kind { kDeviation, kCoverage };
  Kind kind = Kind::kDeviation;
  std::optional<Divergence> divergence;  // deviation only
  double mu_star = 0.0;                  // deviation only
  std::int64_t t = 0;                    // deviation only
  std::optional<ArmModel> arm;           // coverage only
  int n = 0;                             // coverage only
  double epsilon = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 1;
};

// Keys: check = deviation | coverage (required), epsilon, samples (both
// required), seed (default 1); then divergence, mu_star, t for deviation or
// arm, n for coverage. Keys of the other kind are rejected.
CheckConfig interpret_check(const std::vector<ConfigEntry>& entries);

}  // namespace klucb
