#pragma once

#include <cstdint>
#include <vector>

#include "klucb/environment.hpp"
#include "klucb/policy.hpp"

namespace klucb {

// One bandit experiment: the arms, the horizon, the Monte-Carlo replication
// count, the seeding, the reward-scale bound handed to the policies, and the
// rounds at which cumulative pseudo-regret is recorded.
struct Scenario {
  std::vector<ArmModel> arms;
  std::int64_t horizon = 0;
  int replications = 1;
  std::uint64_t master_seed = 0;
  double rescale_bound = 1.0;
  std::vector<std::int64_t> checkpoints;  // strictly increasing, ends at T

  double best_mean() const;
  std::vector<double> gaps() const;  // best_mean - true_mean per arm

  // Throws std::domain_error when any structural invariant fails: no arms,
  // horizon < number of arms, replications < 1, an arm that can produce
  // rewards outside [0, rescale_bound], or malformed checkpoints.
  void validate() const;
};

// Log-spaced rounds in [1, horizon] (at most `points` of them after
// deduplication), always ending at horizon.
std::vector<std::int64_t> default_checkpoints(std::int64_t horizon,
                                              int points = 50);

// Cumulative pseudo-regret (sum of the true-mean gaps of the pulled arms) of
// one replication, recorded at each checkpoint. Deterministic in
// (spec, scenario, replication_index): arm a of replication r draws its
// rewards from the dedicated stream (master_seed, r, a), so the j-th pull of
// an arm yields the same reward no matter which policy is playing.
std::vector<double> run_single(const PolicySpec& spec, const Scenario& scenario,
                               int replication_index);

// The arms pulled by one replication, in order (values in [0, K)).
std::vector<int> action_sequence(const PolicySpec& spec,
                                 const Scenario& scenario,
                                 int replication_index);

// All replications; row r equals run_single(spec, scenario, r). Rows are
// computed concurrently on up to num_threads threads (<= 1 runs serially);
// the result does not depend on the thread count.
std::vector<std::vector<double>> run_replications(const PolicySpec& spec,
                                                  const Scenario& scenario,
                                                  int num_threads);

// Per-checkpoint aggregates over the replications. Quantiles use the
// nearest-rank rule on the sorted per-checkpoint samples: the k-th smallest
// value with k = ceil(q * N).
struct RegretSummary {
  std::vector<std::int64_t> checkpoints;
  std::vector<double> mean_regret;
  std::vector<double> q0005;   // 0.5% quantile
  std::vector<double> q0995;   // 99.5% quantile
  std::vector<double> q09995;  // 99.95% quantile
};

RegretSummary run_monte_carlo(const PolicySpec& spec, const Scenario& scenario,
                              int num_threads);

}  // namespace klucb
