#include "klucb/environment.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace klucb {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

ArmModel ArmModel::bernoulli(double p) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0,
          "bernoulli arm: p must be in [0, 1]");
  return {Kind::kBernoulli, p, 0.0};
}

ArmModel ArmModel::truncated_poisson(double lambda, double cap) {
  require(std::isfinite(lambda) && lambda >= 0.0,
          "tpoisson arm: lambda must be >= 0");
  require(std::isfinite(cap) && cap > 0.0, "tpoisson arm: cap must be > 0");
  return {Kind::kTruncatedPoisson, lambda, cap};
}

ArmModel ArmModel::truncated_exponential(double rate, double cap) {
  require(std::isfinite(rate) && rate > 0.0,
          "texponential arm: rate must be > 0");
  require(std::isfinite(cap) && cap > 0.0,
          "texponential arm: cap must be > 0");
  return {Kind::kTruncatedExponential, rate, cap};
}

ArmModel ArmModel::gaussian(double mu, double sigma2) {
  require(std::isfinite(mu), "gaussian arm: mu must be finite");
  require(std::isfinite(sigma2) && sigma2 > 0.0,
          "gaussian arm: sigma2 must be > 0");
  return {Kind::kGaussian, mu, sigma2};
}

ArmModel ArmModel::finite_support(std::vector<double> values,
                                  std::vector<double> probs) {
  require(!values.empty() && values.size() == probs.size(),
          "finite arm: values and probs must be nonempty and equal length");
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(std::isfinite(values[i]), "finite arm: values must be finite");
    require(std::isfinite(probs[i]) && probs[i] >= 0.0,
            "finite arm: probs must be >= 0");
    sum += probs[i];
  }
  require(std::fabs(sum - 1.0) <= 1e-9, "finite arm: probs must sum to 1");
  for (auto& p : probs) p /= sum;  // normalize exactly after the check
  ArmModel arm{Kind::kFiniteSupport, 0.0, 0.0};
  arm.values_ = std::move(values);
  arm.probs_ = std::move(probs);
  return arm;
}

double ArmModel::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::kBernoulli:
      return rng.uniform01() < a_ ? 1.0 : 0.0;
    case Kind::kTruncatedPoisson: {
      // CDF inversion by sequential search; lambda is small in practice.
      const double u = rng.uniform01();
      double p = std::exp(-a_);
      double cdf = p;
      double k = 0.0;
      while (u >= cdf && k < 1e6) {
        k += 1.0;
        p *= a_ / k;
        cdf += p;
      }
      return std::min(k, b_);
    }
    case Kind::kTruncatedExponential: {
      const double u = rng.uniform01();
      return std::min(-std::log1p(-u) / a_, b_);
    }
    case Kind::kGaussian: {
      // Box-Muller; 1 - u keeps the log argument in (0, 1].
      const double u1 = 1.0 - rng.uniform01();
      const double u2 = rng.uniform01();
      const double z =
          std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
      return a_ + std::sqrt(b_) * z;
    }
    case Kind::kFiniteSupport: {
      const double u = rng.uniform01();
      double cdf = 0.0;
      for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
        cdf += probs_[i];
        if (u < cdf) return values_[i];
      }
      return values_.back();
    }
  }
  return 0.0;
}

double ArmModel::true_mean() const {
  switch (kind_) {
    case Kind::kBernoulli:
      return a_;
    case Kind::kTruncatedPoisson: {
      // E[min(X, cap)] = sum_{k < cap} k P(X=k) + cap P(X >= ceil(cap)).
      const auto kcut = static_cast<long>(std::ceil(b_));
      double p = std::exp(-a_);
      double below = 0.0, cdf = 0.0;
      for (long k = 0; k < kcut; ++k) {
        if (k > 0) p *= a_ / static_cast<double>(k);
        below += static_cast<double>(k) * p;
        cdf += p;
      }
      return below + b_ * (1.0 - cdf);
    }
    case Kind::kTruncatedExponential:
      // integral_0^cap P(X > x) dx = (1 - exp(-rate*cap)) / rate.
      return -std::expm1(-a_ * b_) / a_;
    case Kind::kGaussian:
      return a_;
    case Kind::kFiniteSupport:
      return std::inner_product(values_.begin(), values_.end(),
                                probs_.begin(), 0.0);
  }
  return 0.0;
}

double ArmModel::max_value() const {
  switch (kind_) {
    case Kind::kBernoulli:
      return 1.0;
    case Kind::kTruncatedPoisson:
    case Kind::kTruncatedExponential:
      return b_;
    case Kind::kGaussian:
      return std::numeric_limits<double>::infinity();
    case Kind::kFiniteSupport: {
      double m = values_.front();
      for (double v : values_) m = std::max(m, v);
      return m;
    }
  }
  return 0.0;
}

}  // namespace klucb
