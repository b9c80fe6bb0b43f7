#include "klucb/divergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "klucb/format.hpp"

namespace klucb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// x * log(x / y) with the conventions x*log(x/0) = +inf for x > 0 and
// 0*log(0/y) = 0 for any y >= 0.
double xlog_ratio(double x, double y) {
  if (x == 0.0) return 0.0;
  if (y == 0.0) return kInf;
  return x * std::log(x / y);
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

Divergence Divergence::bernoulli() { return {Family::kBernoulli, 0.0}; }

Divergence Divergence::binomial(double n) {
  require(std::isfinite(n) && n > 0.0, "binomial: n must be finite positive");
  return {Family::kBinomial, n};
}

Divergence Divergence::poisson() { return {Family::kPoisson, 0.0}; }

Divergence Divergence::neg_binomial(double r) {
  require(std::isfinite(r) && r > 0.0,
          "neg_binomial: r must be finite positive");
  return {Family::kNegBinomial, r};
}

Divergence Divergence::gaussian(double sigma2) {
  require(std::isfinite(sigma2) && sigma2 > 0.0,
          "gaussian: sigma2 must be finite positive");
  return {Family::kGaussian, sigma2};
}

Divergence Divergence::gamma(double alpha) {
  require(std::isfinite(alpha) && alpha > 0.0,
          "gamma: alpha must be finite positive");
  return {Family::kGamma, alpha};
}

Divergence Divergence::quadratic(double scale) {
  require(std::isfinite(scale) && scale > 0.0,
          "quadratic: scale must be finite positive");
  return {Family::kQuadratic, scale};
}

double Divergence::mu_lo() const {
  switch (family_) {
    case Family::kBernoulli:
    case Family::kBinomial:
    case Family::kPoisson:
    case Family::kNegBinomial:
    case Family::kGamma:
      return 0.0;
    case Family::kGaussian:
    case Family::kQuadratic:
      return -kInf;
  }
  return 0.0;
}

double Divergence::mu_hi() const {
  switch (family_) {
    case Family::kBernoulli:
      return 1.0;
    case Family::kBinomial:
      return param_;
    case Family::kPoisson:
    case Family::kNegBinomial:
    case Family::kGamma:
    case Family::kGaussian:
    case Family::kQuadratic:
      return kInf;
  }
  return kInf;
}

double Divergence::eval(double mu, double mu_prime) const {
  require(std::isfinite(mu) && std::isfinite(mu_prime),
          "eval: arguments must be finite");
  require(mu >= mu_lo() && mu <= mu_hi() && mu_prime >= mu_lo() &&
              mu_prime <= mu_hi(),
          "eval: argument outside the expectation interval");
  if (mu == mu_prime) return 0.0;  // includes the boundary conventions
  switch (family_) {
    case Family::kBernoulli:
      return xlog_ratio(mu, mu_prime) + xlog_ratio(1.0 - mu, 1.0 - mu_prime);
    case Family::kBinomial:
      return xlog_ratio(mu, mu_prime) +
             xlog_ratio(param_ - mu, param_ - mu_prime);
    case Family::kPoisson:
      return mu_prime - mu + xlog_ratio(mu, mu_prime);
    case Family::kNegBinomial: {
      const double r = param_;
      if (mu_prime == 0.0) return kInf;  // mu > 0 here
      return (r + mu) * std::log((r + mu_prime) / (r + mu)) +
             xlog_ratio(mu, mu_prime);
    }
    case Family::kGaussian: {
      const double gap = mu - mu_prime;
      return gap * gap / (2.0 * param_);
    }
    case Family::kGamma: {
      if (mu == 0.0 || mu_prime == 0.0) return kInf;  // mu != mu_prime here
      const double ratio = mu / mu_prime;
      return param_ * (ratio - 1.0 - std::log(ratio));
    }
    case Family::kQuadratic: {
      const double gap = mu - mu_prime;
      return param_ * gap * gap;
    }
  }
  return kInf;
}

double Divergence::deriv_first(double mu, double mu_star) const {
  require(std::isfinite(mu) && std::isfinite(mu_star),
          "deriv_first: arguments must be finite");
  require(mu > mu_lo() && mu < mu_hi() && mu_star > mu_lo() &&
              mu_star < mu_hi(),
          "deriv_first: arguments must be strictly inside the interval");
  // For one-parameter exponential families this is theta(mu) - theta(mu_star)
  // with theta the natural parameter as a function of the mean.
  switch (family_) {
    case Family::kBernoulli:
      return std::log(mu / mu_star) - std::log((1.0 - mu) / (1.0 - mu_star));
    case Family::kBinomial:
      return std::log(mu / mu_star) -
             std::log((param_ - mu) / (param_ - mu_star));
    case Family::kPoisson:
      return std::log(mu / mu_star);
    case Family::kNegBinomial: {
      const double r = param_;
      return std::log(mu * (r + mu_star) / (mu_star * (r + mu)));
    }
    case Family::kGaussian:
      return (mu - mu_star) / param_;
    case Family::kGamma:
      return param_ * (1.0 / mu_star - 1.0 / mu);
    case Family::kQuadratic:
      return 2.0 * param_ * (mu - mu_star);
  }
  return 0.0;
}

double Divergence::deriv_second(double mu, double mu_prime) const {
  require(std::isfinite(mu) && std::isfinite(mu_prime),
          "deriv_second: arguments must be finite");
  require(mu_prime > mu_lo() && mu_prime < mu_hi(),
          "deriv_second: mu_prime must be strictly inside the interval");
  return (mu_prime - mu) / variance(mu_prime);
}

double Divergence::variance(double mu) const {
  switch (family_) {
    case Family::kBernoulli:
      return mu * (1.0 - mu);
    case Family::kBinomial:
      return mu * (1.0 - mu / param_);
    case Family::kPoisson:
      return mu;
    case Family::kNegBinomial:
      return mu * (1.0 + mu / param_);
    case Family::kGaussian:
      return param_;
    case Family::kGamma:
      return mu * mu / param_;
    case Family::kQuadratic:
      return 1.0 / (2.0 * param_);
  }
  return 0.0;
}

double Divergence::variance_envelope(double mu_a, double mu_star) const {
  require(std::isfinite(mu_a) && std::isfinite(mu_star),
          "variance_envelope: arguments must be finite");
  require(mu_a <= mu_star, "variance_envelope: requires mu_a <= mu_star");
  require(mu_a > mu_lo() && mu_star < mu_hi(),
          "variance_envelope: interval must be inside the open interval");
  switch (family_) {
    case Family::kBernoulli:
    case Family::kBinomial: {
      const double peak = (family_ == Family::kBernoulli) ? 0.5 : param_ / 2.0;
      if (mu_a <= peak && peak <= mu_star) return variance(peak);
      return std::max(variance(mu_a), variance(mu_star));
    }
    case Family::kPoisson:
    case Family::kNegBinomial:
    case Family::kGamma:
      return variance(mu_star);  // variance increasing in the mean
    case Family::kGaussian:
    case Family::kQuadratic:
      return variance(mu_a);  // constant
  }
  return 0.0;
}

std::string Divergence::name() const {
  switch (family_) {
    case Family::kBernoulli:
      return "bernoulli";
    case Family::kPoisson:
      return "poisson";
    case Family::kBinomial:
      return "binomial:" + format_double(param_);
    case Family::kNegBinomial:
      return "negbinomial:" + format_double(param_);
    case Family::kGaussian:
      return "gaussian:" + format_double(param_);
    case Family::kGamma:
      return "gamma:" + format_double(param_);
    case Family::kQuadratic:
      return "quadratic:" + format_double(param_);
  }
  return "";
}

}  // namespace klucb
