#include "klucb/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "klucb/index.hpp"

namespace klucb {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

void EmpiricalDistribution::add(double x) {
  require(x >= 0.0 && x <= 1.0, "add: observation outside [0, 1]");
  auto it = std::lower_bound(support_.begin(), support_.end(), x);
  const auto idx = static_cast<std::size_t>(it - support_.begin());
  if (it != support_.end() && *it == x) {
    ++counts_[idx];
  } else {
    support_.insert(it, x);
    counts_.insert(counts_.begin() + static_cast<std::ptrdiff_t>(idx), 1);
  }
  ++n_;
  value_sum_ += x;
}

double EmpiricalDistribution::mean() const {
  require(n_ >= 1, "mean: empty distribution");
  return value_sum_ / static_cast<double>(n_);
}

double EmpiricalDistribution::weight_at_one() const {
  if (support_.empty() || support_.back() != 1.0) return 0.0;
  return static_cast<double>(counts_.back()) / static_cast<double>(n_);
}

// ---------------------------------------------------------------------------
// K_inf through its concave dual.
// ---------------------------------------------------------------------------

namespace {

struct DualEval {
  double g;   // objective  sum w log(1 - lambda (x - mu))
  double gp;  // derivative sum w (mu - x) / (1 - lambda (x - mu))
  double gpp; // second derivative (always <= 0)
};

DualEval eval_dual(const std::vector<double>& xs, const std::vector<double>& ws,
                   double mu, double lambda) {
  DualEval out{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double w = ws[i];
    const double z = lambda * (xs[i] - mu);
    out.g += w * std::log1p(-z);
    const double ratio = (mu - xs[i]) / (1.0 - z);
    out.gp += w * ratio;
    out.gpp -= w * ratio * ratio;
  }
  return out;
}

// Core of the dual maximization; ws must be positive and sum to 1.
KinfResult kinf_core(const std::vector<double>& xs,
                     const std::vector<double>& ws, double mean,
                     double weight_at_one, double mu) {
  require(mu > 0.0 && mu < 1.0, "kinf: mu must lie strictly inside (0, 1)");
  KinfResult res;
  if (mean >= mu) {
    res.value = 0.0;
    res.lambda = 0.0;
    res.gradient = mu - mean;
    res.at_boundary = true;
    return res;
  }
  const double lambda_max = 1.0 / (1.0 - mu);
  // With no atom at 1 the dual may peak at the right end of its domain.
  if (weight_at_one == 0.0) {
    const DualEval at_max = eval_dual(xs, ws, mu, lambda_max);
    if (at_max.gp >= 0.0) {
      res.value = std::max(0.0, at_max.g);
      res.lambda = lambda_max;
      res.gradient = at_max.gp;
      res.at_boundary = true;
      return res;
    }
  }
  // Interior maximizer: root of the strictly decreasing derivative on
  // [0, lambda_hi]. With an atom at 1 the derivative diverges to -inf at
  // lambda_max, so a guard keeps the evaluations finite.
  double lo = 0.0;
  double hi = lambda_max * (1.0 - 1e-12);
  double x = 0.5 * hi;
  DualEval ev{};
  for (int it = 0; it < 120; ++it) {
    ev = eval_dual(xs, ws, mu, x);
    if (ev.gp > 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (std::fabs(ev.gp) <= 1e-12 || hi - lo <= 1e-13 * lambda_max) break;
    double xn = kNaN;
    if (std::isfinite(ev.gp) && ev.gpp < 0.0) xn = x - ev.gp / ev.gpp;
    if (!(xn > lo && xn < hi) || xn == x) xn = 0.5 * (lo + hi);
    if (xn == x) break;
    x = xn;
  }
  res.value = std::max(0.0, eval_dual(xs, ws, mu, x).g);
  res.lambda = x;
  res.gradient = ev.gp;
  res.at_boundary = false;
  return res;
}

}  // namespace

KinfResult kinf_detailed(const EmpiricalDistribution& dist, double mu) {
  require(dist.total_count() >= 1, "kinf: empty distribution");
  const auto& cs = dist.counts();
  const double n = static_cast<double>(dist.total_count());
  std::vector<double> ws(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i)
    ws[i] = static_cast<double>(cs[i]) / n;
  return kinf_core(dist.support(), ws, dist.mean(), dist.weight_at_one(), mu);
}

double kinf(const EmpiricalDistribution& dist, double mu) {
  return kinf_detailed(dist, mu).value;
}

double kinf_weighted(const std::vector<double>& support,
                     const std::vector<double>& weights, double mu) {
  require(!support.empty() && support.size() == weights.size(),
          "kinf_weighted: support and weights must match and be nonempty");
  double total = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    require(support[i] >= 0.0 && support[i] <= 1.0,
            "kinf_weighted: support value outside [0, 1]");
    require(weights[i] > 0.0, "kinf_weighted: weights must be positive");
    total += weights[i];
  }
  require(std::fabs(total - 1.0) <= 1e-9,
          "kinf_weighted: weights must sum to 1");
  std::vector<double> ws(weights);
  double mean = 0.0;
  double w_at_one = 0.0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    ws[i] /= total;
    mean += ws[i] * support[i];
    if (support[i] == 1.0) w_at_one += ws[i];
  }
  return kinf_core(support, ws, mean, w_at_one, mu).value;
}

// ---------------------------------------------------------------------------
// Empirical-likelihood upper bound.
//
// Maximize sum q_i v_i over distributions q on support(dist) union {1}
// subject to KL(w, q) <= eps. KKT: q_i = lambda w_i / (eta - v_i) with
// multiplier eta >= 1. Either the optimum puts mass on the added point 1
// (eta = 1, lambda = exp(sum w log(1 - x) - eps), U = 1 - lambda), or eta > 1
// solves
//   F(eta) = sum w log(eta - x) + log(sum w / (eta - x)) = eps,
// F strictly decreasing to 0 as eta -> inf, and
//   U = (sum w x/(eta - x)) / (sum w / (eta - x)).
// ---------------------------------------------------------------------------

namespace {

struct RootEval {
  double f;    // F(eta) value
  double fp;   // F'(eta) (<= 0)
  double s1;   // sum w / (eta - x)
  double s1x;  // sum w x / (eta - x)
};

RootEval eval_root(const EmpiricalDistribution& dist, double eta) {
  RootEval out{0.0, 0.0, 0.0, 0.0};
  const auto& xs = dist.support();
  const auto& cs = dist.counts();
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s1x = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double c = static_cast<double>(cs[i]);
    const double t = eta - xs[i];
    const double r = 1.0 / t;
    s0 += c * std::log(t);
    s1 += c * r;
    s2 += c * r * r;
    s1x += c * xs[i] * r;
  }
  const double n = static_cast<double>(dist.total_count());
  s0 /= n;
  s1 /= n;
  s2 /= n;
  s1x /= n;
  out.f = s0 + std::log(s1);
  out.fp = s1 - s2 / s1;
  out.s1 = s1;
  out.s1x = s1x;
  return out;
}

double el_upper_bound_impl(const EmpiricalDistribution& dist, double epsilon,
                           double* eta_hint) {
  require(dist.total_count() >= 1, "el_upper_bound: empty distribution");
  require(std::isfinite(epsilon) && epsilon >= 0.0,
          "el_upper_bound: epsilon must be finite and >= 0");
  const double mean = dist.mean();
  if (epsilon == 0.0) return mean;

  // Binary support: distributions on {0, 1} are exactly the Bernoulli laws,
  // so the optimization collapses to the Bernoulli divergence inversion.
  // Routing through the same solver keeps this bound bit-identical to the
  // parametric Bernoulli index on binary data (including argmax ties).
  {
    const auto& xs = dist.support();
    bool binary = true;
    for (double v : xs) {
      if (v != 0.0 && v != 1.0) {
        binary = false;
        break;
      }
    }
    if (binary) return kl_index(Divergence::bernoulli(), mean, epsilon);
  }

  if (mean >= 1.0) return 1.0;

  if (dist.weight_at_one() == 0.0) {
    // Mass-at-1 branch: feasible iff F(1) <= eps; then U = 1 - lambda.
    const auto& xs = dist.support();
    const auto& cs = dist.counts();
    double a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double c = static_cast<double>(cs[i]);
      a += c * std::log1p(-xs[i]);
      b += c / (1.0 - xs[i]);
    }
    const double n = static_cast<double>(dist.total_count());
    a /= n;
    b /= n;
    if (a + std::log(b) <= epsilon) return 1.0 - std::exp(a - epsilon);
  }

  // Interior branch: safeguarded Newton on F(eta) = eps over eta in (1, inf),
  // keeping the bracket lo (F > eps) < root < hi (F <= eps). The returned
  // value is evaluated at the final iterate, where |F - eps| has converged,
  // never at a stale bracket endpoint.
  double lo = 1.0;   // F(lo) >= eps side
  double hi = kNaN;  // F(hi) <= eps side
  double x = 1.0 + std::max(1e-6, 0.5 * (1.0 - mean));
  if (eta_hint != nullptr && std::isfinite(*eta_hint) && *eta_hint > 1.0)
    x = *eta_hint;
  RootEval ev = eval_root(dist, x);
  for (int it = 0; it < 200; ++it) {
    if (ev.f > epsilon) {
      lo = std::max(lo, x);
    } else if (std::isnan(hi) || x < hi) {
      hi = x;
    }
    if (std::fabs(ev.f - epsilon) <= 1e-12 * std::max(1.0, epsilon)) break;
    if (!std::isnan(hi) && hi - lo <= 1e-13 * std::max(1.0, lo)) {
      x = 0.5 * (lo + hi);
      ev = eval_root(dist, x);
      break;
    }
    double xn = kNaN;
    if (std::isfinite(ev.f) && std::isfinite(ev.fp) && ev.fp < 0.0)
      xn = x - (ev.f - epsilon) / ev.fp;
    const bool inside =
        std::isfinite(xn) && xn > lo && (std::isnan(hi) || xn < hi);
    if (!inside || xn == x) {
      if (std::isnan(hi)) {
        xn = 1.0 + 2.0 * std::max(lo - 1.0, 1e-6);  // widen to the right
      } else {
        xn = 0.5 * (lo + hi);
      }
    }
    if (xn == x) break;
    x = xn;
    ev = eval_root(dist, x);
  }
  if (eta_hint != nullptr) *eta_hint = x;
  return ev.s1x / ev.s1;
}

}  // namespace

double el_upper_bound(const EmpiricalDistribution& dist, double epsilon) {
  return el_upper_bound_impl(dist, epsilon, nullptr);
}

double el_upper_bound_hinted(const EmpiricalDistribution& dist, double epsilon,
                             double& eta_hint) {
  return el_upper_bound_impl(dist, epsilon, &eta_hint);
}

double el_upper_bound_bisection(const EmpiricalDistribution& dist,
                                double epsilon) {
  require(dist.total_count() >= 1, "el_upper_bound: empty distribution");
  require(std::isfinite(epsilon) && epsilon >= 0.0,
          "el_upper_bound: epsilon must be finite and >= 0");
  const double mean = dist.mean();
  if (epsilon == 0.0) return mean;
  if (mean >= 1.0) return 1.0;
  double lo = mean;
  double hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (kinf(dist, mid) <= epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace klucb
