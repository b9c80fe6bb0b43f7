#pragma once

#include <vector>

#include "klucb/rng.hpp"

namespace klucb {

// Reward distribution of one arm. Sampling uses only raw uniform draws from
// Rng with documented algorithms (CDF inversion, Box-Muller), so streams are
// reproducible across platforms. "Truncated" means censored: samples are
// min(X, cap).
class ArmModel {
 public:
  enum class Kind {
    kBernoulli,
    kTruncatedPoisson,
    kTruncatedExponential,
    kGaussian,
    kFiniteSupport,
  };

  static ArmModel bernoulli(double p);
  static ArmModel truncated_poisson(double lambda, double cap);
  static ArmModel truncated_exponential(double rate, double cap);
  static ArmModel gaussian(double mu, double sigma2);
  static ArmModel finite_support(std::vector<double> values,
                                 std::vector<double> probs);

  Kind kind() const { return kind_; }
  double param_a() const { return a_; }  // p / lambda / rate / mu
  double param_b() const { return b_; }  // - / cap / cap / sigma2
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& probs() const { return probs_; }

  double sample(Rng& rng) const;

  // Exact expected value (1e-12 accuracy); the truncated kinds account for
  // the censoring at cap.
  double true_mean() const;

  // Smallest B with P(reward <= B) = 1; +infinity for Gaussian.
  double max_value() const;

 private:
  ArmModel(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}
  Kind kind_;
  double a_ = 0.0;
  double b_ = 0.0;
  std::vector<double> values_;
  std::vector<double> probs_;
};

}  // namespace klucb
