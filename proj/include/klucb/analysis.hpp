#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klucb/divergence.hpp"
#include "klucb/environment.hpp"

namespace klucb {

// One labeled additive term of a finite-time bound.
struct BoundTerm {
  std::string label;
  double value = 0.0;
};

// Finite-time upper bound on the expected pulls of one suboptimal arm,
// decomposed into its additive terms.
struct BoundReport {
  double leading_term = 0.0;              // log(T) / divergence
  std::vector<BoundTerm> remainder_terms; // everything after the leading term
  double total_bound = 0.0;               // leading + sum of remainders
  double regret_contribution = 0.0;       // (mu_star - mu_a) * total_bound
};

// Finite-time bound on E[pulls of a suboptimal arm] for the divergence-index
// policy run with the log t + 3 log log t exploration level:
//   log(T)/d + 2 sqrt(2 pi s2 d'^2 / d^3) sqrt(log T + 3 log log T)
//   + (4e + 3/d) log log T + 8 s2 (d'/d)^2 + 6,
// with d = d(mu_a, mu_star), d' its derivative in the first argument, and
// s2 the maximal family variance on [mu_a, mu_star]. Requires T >= 3 and
// mu_a < mu_star, both strictly inside the expectation interval.
BoundReport thm1_bound(std::int64_t horizon, double mu_a, double mu_star,
                       const Divergence& d);

// Specialization of the same bound to rewards in [0, 1] compared through the
// Bernoulli divergence, with the variance bounded by 1/4:
//   log(T)/d + sqrt(2 pi) L / d^{3/2} sqrt(log T + 3 log log T)
//   + (4e + 3/d) log log T + 2 L^2 / d^2 + 6,
// where L = log(mu_star (1 - mu_a) / (mu_a (1 - mu_star))). Requires
// 0 < mu_a < mu_star < 1 and T >= 3.
BoundReport corollary1_bound(std::int64_t horizon, double mu_a,
                             double mu_star);

// Leading term log(T)/kinf of the nonparametric bound satisfied by the
// empirical-likelihood policy (expected-pulls scale); the lower-order terms
// are not evaluated.
double el_leading_term(std::int64_t horizon, double kinf_value);

// Hardness constant K_inf(law(arm), mu_star) used in the asymptotic lower
// bound. Parametric arm kinds use their family divergence at the true means
// (bernoulli -> Bernoulli, truncated Poisson -> Poisson, truncated
// exponential -> Gamma(1), gaussian -> Gaussian); explicit finite-support
// arms use the exact bounded-rewards K_inf on [0, scale_bound].
double lower_bound_kinf(const ArmModel& arm, double mu_star,
                        double scale_bound);

// Exact K_inf of the arm's law over distributions supported in
// [0, scale_bound], computed on the support rescaled to [0, 1]. Defined for
// arms whose law has finite support (bernoulli, finite, truncated Poisson);
// throws std::domain_error for continuous laws.
double bounded_kinf(const ArmModel& arm, double mu_star, double scale_bound);

// Constant C of the asymptotic lower-bound line t -> C * max(0, log t):
// C = sum over suboptimal arms of (mu_star - mu_a) / K_inf(arm, mu_star).
// Zero when every arm is optimal.
double lower_bound_constant(const std::vector<ArmModel>& arms,
                            double scale_bound);
double lower_bound_line(const std::vector<ArmModel>& arms, double scale_bound,
                        std::int64_t t);

// Result of a Monte-Carlo verification of a probability bound.
struct CheckResult {
  double empirical_prob = 0.0;
  double bound = 0.0;
  bool vacuous = false;  // bound >= 1: the inequality holds trivially
};

// Estimates P{ exists n <= t : mean_n < mu_star and n d(mean_n, mu_star)
// >= epsilon } over i.i.d. length-t reward streams drawn from the family
// member with mean mu_star, against the bound e ceil(epsilon log t)
// exp(-epsilon). Requires epsilon > 1, t >= 2. Sampling is implemented for
// the Bernoulli, Binomial (integer trials), Poisson, Gaussian and
// exponential (Gamma with shape 1) families; other families throw
// std::domain_error.
CheckResult deviation_check(const Divergence& d, double mu_star,
                            std::int64_t t, double epsilon,
                            std::int64_t samples, std::uint64_t seed,
                            int num_threads);

// Estimates P{ U(empirical law of n draws from nu0, epsilon) <= E(nu0) }
// against the bound e (n + 2) exp(-n epsilon), where U is el_upper_bound.
// nu0 must be supported in [0, 1] with mean strictly inside (0, 1).
CheckResult coverage_check(const ArmModel& nu0, int n, double epsilon,
                           std::int64_t samples, std::uint64_t seed,
                           int num_threads);

}  // namespace klucb
