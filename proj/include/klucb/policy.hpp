#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klucb/divergence.hpp"
#include "klucb/empirical.hpp"
#include "klucb/exploration.hpp"

namespace klucb {

enum class PolicyKind {
  kKlUcb,           // divergence-based index policy
  kEmpiricalKlUcb,  // empirical-likelihood index on the observed support
  kUcb,             // mean + sqrt(log(t) / (2 N))
  kUcbCor2,         // mean + sqrt((log t + 3 log log t) / (2 N))
  kUcbV,            // variance-aware Bernstein-style index
  kUcbTuned,        // variance-capped index
};

struct PolicySpec {
  PolicyKind kind;
  std::optional<Divergence> divergence;  // set iff kind == kKlUcb
  ExplorationSchedule schedule = ExplorationSchedule::log_t();

  static PolicySpec klucb(const Divergence& d,
                          const ExplorationSchedule& schedule);
  static PolicySpec empirical_klucb(const ExplorationSchedule& schedule);
  static PolicySpec ucb();
  static PolicySpec ucb_cor2();
  static PolicySpec ucb_v();
  static PolicySpec ucb_tuned();

  // Canonical name used in CSV output, e.g. "klucb-bernoulli-logt".
  std::string name() const;
};

// Sequential state of one policy over K arms. Rewards enter on the raw scale
// [0, rescale_bound]; policies whose index math lives on [0, 1] (Bernoulli
// and Quadratic divergences, empirical KL-UCB) store statistics divided by
// rescale_bound and multiply their index back up. Everything else works on
// the raw scale with range-adapted confidence terms.
class PolicyState {
 public:
  PolicyState(const PolicySpec& spec, int num_arms, double rescale_bound);

  // Arm to pull at round t+1: arm t while t < K (initialization), then the
  // smallest index maximizer. Arms are numbered from 0.
  int select_arm() const;

  // Records the reward of one pull; throws std::domain_error if raw_reward
  // is outside [0, rescale_bound].
  void update(int arm, double raw_reward);

  // Upper-confidence index of an arm that has been pulled at least once,
  // on the raw reward scale. Requires t >= 1.
  double compute_index(int arm) const;

  std::int64_t round_count() const { return t_; }
  int num_arms() const { return num_arms_; }
  std::int64_t pulls(int arm) const { return pulls_[arm]; }
  double reward_sum(int arm) const { return sum_[arm]; }
  double reward_sq_sum(int arm) const { return sumsq_[arm]; }
  const EmpiricalDistribution& distribution(int arm) const {
    return dists_[arm];
  }
  const PolicySpec& spec() const { return spec_; }
  double rescale_bound() const { return rescale_bound_; }
  bool rescaled() const { return rescaled_; }

 private:
  double mean_of(int arm) const { return sum_[arm] / pulls_[arm]; }

  PolicySpec spec_;
  int num_arms_;
  double rescale_bound_;
  bool rescaled_;
  std::int64_t t_ = 0;
  std::vector<std::int64_t> pulls_;
  std::vector<double> sum_;
  std::vector<double> sumsq_;
  std::vector<EmpiricalDistribution> dists_;       // empirical policy only
  mutable std::vector<double> el_eta_hints_;       // dual warm starts
};

}  // namespace klucb
