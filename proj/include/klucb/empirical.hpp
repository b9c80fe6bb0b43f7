#pragma once

#include <cstdint>
#include <vector>

namespace klucb {

// Empirical distribution of observations on [0, 1]: sorted distinct support
// values with integer counts. Owned by a single simulation run; mutation only
// through add().
class EmpiricalDistribution {
 public:
  // Adds one observation; throws std::domain_error outside [0, 1].
  void add(double x);

  std::int64_t total_count() const { return n_; }
  double mean() const;

  const std::vector<double>& support() const { return support_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

  // Weight of the atom at exactly 1 (0 if none).
  double weight_at_one() const;

 private:
  std::vector<double> support_;
  std::vector<std::int64_t> counts_;
  std::int64_t n_ = 0;
  double value_sum_ = 0.0;
};

struct KinfResult {
  double value = 0.0;        // K_inf(dist, mu)
  double lambda = 0.0;       // maximizing dual variable in [0, 1/(1-mu)]
  double gradient = 0.0;     // dual objective derivative at lambda
  bool at_boundary = false;  // maximizer sits at lambda = 1/(1-mu)
};

// K_inf(dist, mu): smallest KL(dist, nu') over finitely supported nu' on
// [0, 1] with mean above mu. Computed through the concave dual
//   max over lambda in [0, 1/(1-mu)] of sum_i w_i log(1 - lambda (x_i - mu)).
// Returns 0 when mean(dist) >= mu; result within 1e-9 of the true value.
// Requires 0 < mu < 1 and a nonempty dist; throws std::domain_error.
double kinf(const EmpiricalDistribution& dist, double mu);
KinfResult kinf_detailed(const EmpiricalDistribution& dist, double mu);

// K_inf for an explicitly weighted law: support values in [0, 1] with
// positive weights summing to 1 (tolerance 1e-9, renormalized internally).
// Same contract as kinf() otherwise.
double kinf_weighted(const std::vector<double>& support,
                     const std::vector<double>& weights, double mu);

// Empirical-likelihood upper-confidence value
//   U(dist, eps) = sup { E(nu') : nu' on support(dist) union {1},
//                        KL(dist, nu') <= eps }.
// Solved in closed form when the optimum puts mass on the added point 1,
// otherwise by a single safeguarded-Newton root-find of the dual equation;
// result within 1e-8 of the supremum. eps must be >= 0 and finite.
double el_upper_bound(const EmpiricalDistribution& dist, double epsilon);

// Same value computed as sup { mu in [mean, 1] : kinf(dist, mu) <= eps } by
// bisection (60 iterations). Slower reference route kept for cross-checks.
double el_upper_bound_bisection(const EmpiricalDistribution& dist,
                                double epsilon);

// el_upper_bound with a warm-start hint for the dual root (the value returned
// through eta_hint by a previous call on a similar instance). Identical
// result up to solver tolerance; eta_hint is updated in place.
double el_upper_bound_hinted(const EmpiricalDistribution& dist, double epsilon,
                             double& eta_hint);

}  // namespace klucb
