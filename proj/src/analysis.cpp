#include "klucb/analysis.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "klucb/empirical.hpp"
#include "klucb/rng.hpp"

namespace klucb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

BoundReport assemble(double leading, std::vector<BoundTerm> remainders,
                     double gap) {
  BoundReport report;
  report.leading_term = leading;
  report.remainder_terms = std::move(remainders);
  report.total_bound = leading;
  for (const auto& term : report.remainder_terms)
    report.total_bound += term.value;
  report.regret_contribution = gap * report.total_bound;
  return report;
}

}  // namespace

BoundReport thm1_bound(std::int64_t horizon, double mu_a, double mu_star,
                       const Divergence& d) {
  require(horizon >= 3, "thm1_bound: horizon must be >= 3");
  require(std::isfinite(mu_a) && std::isfinite(mu_star) && mu_a < mu_star,
          "thm1_bound: requires mu_a < mu_star");
  const double dv = d.eval(mu_a, mu_star);
  require(std::isfinite(dv) && dv > 0.0,
          "thm1_bound: divergence must be finite positive");
  const double dp = d.deriv_first(mu_a, mu_star);
  const double s2 = d.variance_envelope(mu_a, mu_star);
  const double log_t = std::log(static_cast<double>(horizon));
  const double loglog_t = std::log(log_t);
  const double f_t = log_t + 3.0 * loglog_t;
  const double pi = std::numbers::pi;
  const double e = std::numbers::e;
  std::vector<BoundTerm> rem;
  rem.push_back(
      {"sqrt_log",
       2.0 * std::sqrt(2.0 * pi * s2 * dp * dp / (dv * dv * dv)) *
           std::sqrt(f_t)});
  rem.push_back({"loglog", (4.0 * e + 3.0 / dv) * loglog_t});
  rem.push_back({"variance_offset", 8.0 * s2 * (dp / dv) * (dp / dv)});
  rem.push_back({"constant", 6.0});
  return assemble(log_t / dv, std::move(rem), mu_star - mu_a);
}

BoundReport corollary1_bound(std::int64_t horizon, double mu_a,
                             double mu_star) {
  require(horizon >= 3, "corollary1_bound: horizon must be >= 3");
  require(mu_a > 0.0 && mu_a < mu_star && mu_star < 1.0,
          "corollary1_bound: requires 0 < mu_a < mu_star < 1");
  const Divergence ber = Divergence::bernoulli();
  const double dv = ber.eval(mu_a, mu_star);
  const double big_l =
      std::log(mu_star * (1.0 - mu_a) / (mu_a * (1.0 - mu_star)));
  const double log_t = std::log(static_cast<double>(horizon));
  const double loglog_t = std::log(log_t);
  const double f_t = log_t + 3.0 * loglog_t;
  const double pi = std::numbers::pi;
  const double e = std::numbers::e;
  std::vector<BoundTerm> rem;
  rem.push_back({"sqrt_log", std::sqrt(2.0 * pi) * big_l *
                                 std::sqrt(f_t) / std::pow(dv, 1.5)});
  rem.push_back({"loglog", (4.0 * e + 3.0 / dv) * loglog_t});
  rem.push_back({"variance_offset", 2.0 * big_l * big_l / (dv * dv)});
  rem.push_back({"constant", 6.0});
  return assemble(log_t / dv, std::move(rem), mu_star - mu_a);
}

double el_leading_term(std::int64_t horizon, double kinf_value) {
  require(horizon >= 2, "el_leading_term: horizon must be >= 2");
  require(kinf_value > 0.0, "el_leading_term: kinf must be positive");
  return std::log(static_cast<double>(horizon)) / kinf_value;
}

double lower_bound_kinf(const ArmModel& arm, double mu_star,
                        double scale_bound) {
  require(std::isfinite(mu_star), "lower_bound_kinf: mu_star must be finite");
  switch (arm.kind()) {
    case ArmModel::Kind::kBernoulli:
      return Divergence::bernoulli().eval(arm.true_mean(), mu_star);
    case ArmModel::Kind::kTruncatedPoisson:
      return Divergence::poisson().eval(arm.true_mean(), mu_star);
    case ArmModel::Kind::kTruncatedExponential:
      return Divergence::gamma(1.0).eval(arm.true_mean(), mu_star);
    case ArmModel::Kind::kGaussian:
      return Divergence::gaussian(arm.param_b()).eval(arm.true_mean(),
                                                      mu_star);
    case ArmModel::Kind::kFiniteSupport: {
      require(scale_bound > 0.0 && std::isfinite(scale_bound),
              "lower_bound_kinf: scale_bound must be finite positive");
      std::vector<double> values;
      std::vector<double> weights;
      values.reserve(arm.values().size());
      weights.reserve(arm.values().size());
      for (std::size_t i = 0; i < arm.values().size(); ++i) {
        if (arm.probs()[i] <= 0.0) continue;  // drop never-seen atoms
        const double v = arm.values()[i];
        require(v >= 0.0 && v <= scale_bound,
                "lower_bound_kinf: finite-support value outside "
                "[0, scale_bound]");
        values.push_back(v / scale_bound);
        weights.push_back(arm.probs()[i]);
      }
      return kinf_weighted(values, weights, mu_star / scale_bound);
    }
  }
  throw std::domain_error("lower_bound_kinf: unknown arm kind");
}

double bounded_kinf(const ArmModel& arm, double mu_star, double scale_bound) {
  require(scale_bound > 0.0 && std::isfinite(scale_bound),
          "bounded_kinf: scale_bound must be finite positive");
  std::vector<double> values;
  std::vector<double> weights;
  switch (arm.kind()) {
    case ArmModel::Kind::kBernoulli: {
      const double p = arm.true_mean();
      if (p < 1.0) {
        values.push_back(0.0);
        weights.push_back(1.0 - p);
      }
      if (p > 0.0) {
        values.push_back(1.0);
        weights.push_back(p);
      }
      break;
    }
    case ArmModel::Kind::kFiniteSupport:
      for (std::size_t i = 0; i < arm.values().size(); ++i) {
        if (arm.probs()[i] <= 0.0) continue;
        values.push_back(arm.values()[i]);
        weights.push_back(arm.probs()[i]);
      }
      break;
    case ArmModel::Kind::kTruncatedPoisson: {
      // Censored law: atoms at k < cap, plus the censor atom at cap itself.
      const double lambda = arm.param_a();
      const double cap = arm.param_b();
      const auto kcut = static_cast<long>(std::ceil(cap));
      double p = std::exp(-lambda);
      double cdf = 0.0;
      for (long k = 0; k < kcut; ++k) {
        if (k > 0) p *= lambda / static_cast<double>(k);
        if (p > 0.0) {
          values.push_back(static_cast<double>(k));
          weights.push_back(p);
        }
        cdf += p;
      }
      if (cdf < 1.0) {
        values.push_back(cap);
        weights.push_back(1.0 - cdf);
      }
      break;
    }
    case ArmModel::Kind::kTruncatedExponential:
    case ArmModel::Kind::kGaussian:
      throw std::domain_error(
          "bounded_kinf: the arm's law does not have finite support");
  }
  for (double& v : values) {
    require(v >= 0.0 && v <= scale_bound,
            "bounded_kinf: support value outside [0, scale_bound]");
    v /= scale_bound;
  }
  return kinf_weighted(values, weights, mu_star / scale_bound);
}

double lower_bound_constant(const std::vector<ArmModel>& arms,
                            double scale_bound) {
  require(!arms.empty(), "lower_bound_constant: no arms");
  double mu_star = -kInf;
  for (const auto& arm : arms) mu_star = std::max(mu_star, arm.true_mean());
  double constant = 0.0;
  for (const auto& arm : arms) {
    const double mu = arm.true_mean();
    if (mu >= mu_star) continue;
    const double k = lower_bound_kinf(arm, mu_star, scale_bound);
    require(k > 0.0, "lower_bound_constant: kinf must be positive");
    if (std::isfinite(k)) constant += (mu_star - mu) / k;
  }
  return constant;
}

double lower_bound_line(const std::vector<ArmModel>& arms, double scale_bound,
                        std::int64_t t) {
  const double log_t = t >= 1 ? std::log(static_cast<double>(t)) : 0.0;
  return lower_bound_constant(arms, scale_bound) * std::max(0.0, log_t);
}

// ---------------------------------------------------------------------------
// Monte-Carlo verifiers.
// ---------------------------------------------------------------------------

namespace {

// Counts how many of `samples` independent trials satisfy `trial`; each
// trial i gets its own generator seeded from (seed, i). The count does not
// depend on the thread schedule.
std::int64_t count_events(std::int64_t samples, std::uint64_t seed,
                          int num_threads,
                          const std::function<bool(Rng&)>& trial) {
  require(samples >= 1, "check: samples must be >= 1");
  std::atomic<std::int64_t> next{0};
  std::atomic<std::int64_t> hits{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= samples) return;
      Rng rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
      try {
        if (trial(rng)) hits.fetch_add(1, std::memory_order_relaxed);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (num_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < num_threads; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return hits.load();
}

// One draw from the family member of `d` with mean mu (raw uniform-based
// samplers, reproducible across platforms).
double sample_family(const Divergence& d, double mu, Rng& rng) {
  switch (d.family()) {
    case Family::kBernoulli:
      return rng.uniform01() < mu ? 1.0 : 0.0;
    case Family::kBinomial: {
      const auto trials = static_cast<std::int64_t>(std::llround(d.param()));
      require(std::fabs(d.param() - static_cast<double>(trials)) <= 1e-9 &&
                  trials >= 1,
              "deviation_check: binomial trial count must be an integer");
      const double p = mu / d.param();
      double total = 0.0;
      for (std::int64_t i = 0; i < trials; ++i)
        if (rng.uniform01() < p) total += 1.0;
      return total;
    }
    case Family::kPoisson: {
      const double u = rng.uniform01();
      double probability = std::exp(-mu);
      double cumulative = probability;
      double k = 0.0;
      while (u > cumulative && k < 1e6) {
        k += 1.0;
        probability *= mu / k;
        cumulative += probability;
      }
      return k;
    }
    case Family::kGaussian: {
      const double u1 = rng.uniform01();
      const double u2 = rng.uniform01();
      const double radius = std::sqrt(-2.0 * std::log1p(-u1));
      return mu + std::sqrt(d.param()) *
                      radius * std::cos(2.0 * std::numbers::pi * u2);
    }
    case Family::kGamma:
      require(d.param() == 1.0,
              "deviation_check: only the exponential member (shape 1) of the "
              "Gamma family has a sampler");
      return -mu * std::log1p(-rng.uniform01());
    case Family::kNegBinomial:
    case Family::kQuadratic:
      break;
  }
  throw std::domain_error("deviation_check: no sampler for this family");
}

// Largest x < mu_star with d(x, mu_star) >= level, or -inf when no such x
// exists inside the expectation interval. d(., mu_star) decreases on
// [mu_lo, mu_star], so this is a bisection for the root of d(x, mu_star) =
// level.
double deviation_threshold(const Divergence& d, double mu_star, double level) {
  double lo = d.mu_lo();
  if (!std::isfinite(lo)) {
    // Unbounded-below families seen here are Gaussian-like; use the closed
    // form x = mu_star - sqrt(2 sigma2 level).
    if (d.family() == Family::kGaussian)
      return mu_star - std::sqrt(2.0 * d.param() * level);
    lo = mu_star - 1.0;
    while (d.eval(lo, mu_star) < level) lo = mu_star - 2.0 * (mu_star - lo);
  }
  if (d.eval(lo, mu_star) < level) return -kInf;
  double hi = mu_star;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (d.eval(mid, mu_star) >= level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

CheckResult deviation_check(const Divergence& d, double mu_star,
                            std::int64_t t, double epsilon,
                            std::int64_t samples, std::uint64_t seed,
                            int num_threads) {
  require(t >= 2, "deviation_check: t must be >= 2");
  require(std::isfinite(epsilon) && epsilon > 1.0,
          "deviation_check: epsilon must be > 1");
  require(mu_star > d.mu_lo() && mu_star < d.mu_hi(),
          "deviation_check: mu_star must be strictly inside the interval");
  {
    // Fail fast on families without a sampler, before any thread starts.
    Rng probe(stream_seed(seed, ~std::uint64_t{0}));
    (void)sample_family(d, mu_star, probe);
  }
  // Threshold on the running sum: the event at sample size n is
  // sum_n <= n * x_n with d(x_n, mu_star) = epsilon / n.
  std::vector<double> sum_thresholds(static_cast<std::size_t>(t) + 1, -kInf);
  for (std::int64_t n = 1; n <= t; ++n) {
    const double x =
        deviation_threshold(d, mu_star, epsilon / static_cast<double>(n));
    if (std::isfinite(x))
      sum_thresholds[static_cast<std::size_t>(n)] =
          static_cast<double>(n) * x;
  }
  const std::int64_t hits =
      count_events(samples, seed, num_threads, [&](Rng& rng) {
        double running_sum = 0.0;
        for (std::int64_t n = 1; n <= t; ++n) {
          running_sum += sample_family(d, mu_star, rng);
          if (running_sum <= sum_thresholds[static_cast<std::size_t>(n)])
            return true;
        }
        return false;
      });
  CheckResult result;
  result.empirical_prob =
      static_cast<double>(hits) / static_cast<double>(samples);
  result.bound = std::numbers::e *
                 std::ceil(epsilon * std::log(static_cast<double>(t))) *
                 std::exp(-epsilon);
  result.vacuous = result.bound >= 1.0;
  return result;
}

CheckResult coverage_check(const ArmModel& nu0, int n, double epsilon,
                           std::int64_t samples, std::uint64_t seed,
                           int num_threads) {
  require(n >= 1, "coverage_check: n must be >= 1");
  require(std::isfinite(epsilon) && epsilon > 0.0,
          "coverage_check: epsilon must be positive");
  require(nu0.max_value() <= 1.0,
          "coverage_check: distribution must be supported in [0, 1]");
  if (nu0.kind() == ArmModel::Kind::kFiniteSupport)
    for (double v : nu0.values())
      require(v >= 0.0, "coverage_check: negative support value");
  const double mean0 = nu0.true_mean();
  require(mean0 > 0.0 && mean0 < 1.0,
          "coverage_check: the mean must lie strictly inside (0, 1)");
  const std::int64_t hits =
      count_events(samples, seed, num_threads, [&](Rng& rng) {
        EmpiricalDistribution dist;
        for (int i = 0; i < n; ++i) dist.add(nu0.sample(rng));
        return el_upper_bound(dist, epsilon) <= mean0;
      });
  CheckResult result;
  result.empirical_prob =
      static_cast<double>(hits) / static_cast<double>(samples);
  result.bound = std::numbers::e * (static_cast<double>(n) + 2.0) *
                 std::exp(-static_cast<double>(n) * epsilon);
  result.vacuous = result.bound >= 1.0;
  return result;
}

}  // namespace klucb
