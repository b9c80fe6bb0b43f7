#pragma once

#include <string>

namespace klucb {

// One-parameter reward families indexed by their mean, each equipped with the
// KL divergence d(mu, mu') between the family members with those means.
// Values live on the closed expectation interval [mu_lo, mu_hi] (endpoints may
// be infinite); d extends to the boundary by continuity and +infinity is a
// first-class result.
enum class Family {
  kBernoulli,      // means in [0, 1]
  kBinomial,       // Binomial with n trials, means in [0, n]
  kPoisson,        // means in [0, +inf)
  kNegBinomial,    // Negative Binomial with r failures, means in [0, +inf)
  kGaussian,       // known variance sigma2, means in (-inf, +inf)
  kGamma,          // known shape alpha, means in [0, +inf)
  kQuadratic,      // d(mu, mu') = scale * (mu - mu')^2, means unrestricted
};

class Divergence {
 public:
  static Divergence bernoulli();
  static Divergence binomial(double n);
  static Divergence poisson();
  static Divergence neg_binomial(double r);
  static Divergence gaussian(double sigma2);
  static Divergence gamma(double alpha);
  static Divergence quadratic(double scale);

  Family family() const { return family_; }
  double param() const { return param_; }

  // Closed expectation interval endpoints (may be +/- infinity).
  double mu_lo() const;
  double mu_hi() const;

  // d(mu, mu_prime), extended by continuity to the closed interval; returns
  // +infinity where the extension is infinite. Both arguments must be finite
  // and inside [mu_lo, mu_hi]; throws std::domain_error otherwise.
  double eval(double mu, double mu_prime) const;

  // Partial derivative of d with respect to the first argument, evaluated at
  // (mu, mu_star); both arguments must lie strictly inside the open interval.
  double deriv_first(double mu, double mu_star) const;

  // Partial derivative of d with respect to the second argument. Equals
  // (mu_prime - mu) / variance(mu_prime) for every family here.
  double deriv_second(double mu, double mu_prime) const;

  // Variance of the family member with mean mu.
  double variance(double mu) const;

  // max of variance() over [mu_a, mu_star]; requires mu_a <= mu_star and the
  // interval inside the open expectation interval.
  double variance_envelope(double mu_a, double mu_star) const;

  // Canonical short name, e.g. "bernoulli", "gamma:1", "quadratic:2".
  std::string name() const;

 private:
  Divergence(Family family, double param) : family_(family), param_(param) {}
  Family family_;
  double param_;
};

}  // namespace klucb
