#include "klucb/index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace klucb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_inputs(const Divergence& d, double mu_hat, double epsilon,
                     const char* who) {
  if (!std::isfinite(mu_hat) || std::isnan(epsilon) || epsilon < 0.0)
    throw std::domain_error(std::string(who) +
                            ": needs finite mu_hat and epsilon >= 0");
  if (mu_hat < d.mu_lo() || mu_hat > d.mu_hi())
    throw std::domain_error(std::string(who) +
                            ": mu_hat outside the expectation interval");
}

// Finds the boundary point where d(mu_hat, .) crosses epsilon, given one end
// with d <= epsilon (`feas`) and one with d >= epsilon (`infeas`, +inf is
// fine). Safeguarded Newton using the second-argument derivative, falling
// back to bisection whenever the Newton step leaves the bracket or the
// divergence is infinite at the probe. Returns the feasible end of the final
// bracket, so the result satisfies d(mu_hat, result) <= epsilon and lies
// within ~1e-11 of the true crossing.
double solve_boundary(const Divergence& d, double mu_hat, double epsilon,
                      double feas, double infeas) {
  double x = infeas;
  for (int it = 0; it < 160; ++it) {
    const double g = d.eval(mu_hat, x) - epsilon;
    if (g > 0.0) {
      infeas = x;
    } else {
      feas = x;
    }
    const double width = std::fabs(infeas - feas);
    const double tol =
        1e-11 + 8.0 * std::numeric_limits<double>::epsilon() *
                    (std::fabs(feas) + std::fabs(infeas));
    if (width <= tol) break;
    double xn = std::numeric_limits<double>::quiet_NaN();
    if (std::isfinite(g)) {
      const double gp = d.deriv_second(mu_hat, x);
      if (std::isfinite(gp) && gp != 0.0) xn = x - g / gp;
    }
    const double lo = std::min(feas, infeas);
    const double hi = std::max(feas, infeas);
    if (!(xn > lo && xn < hi) || xn == x) xn = 0.5 * (lo + hi);
    if (xn == x) break;  // bracket exhausted at machine precision
    x = xn;
  }
  return feas;
}

// Right bracket: a point hi >= the supremum with d(mu_hat, hi) >= epsilon.
double upper_bracket(const Divergence& d, double mu_hat, double epsilon) {
  switch (d.family()) {
    case Family::kBernoulli:
      // Pinsker: d >= 2 (mu - mu')^2, so the supremum is below this point.
      return std::min(1.0, mu_hat + std::sqrt(epsilon / 2.0));
    case Family::kBinomial:
      // Same bound scaled to range n: d >= (2/n) (mu - mu')^2.
      return std::min(d.mu_hi(),
                      mu_hat + std::sqrt(d.param() * epsilon / 2.0));
    default: {
      double hi = mu_hat + 1.0;
      for (int it = 0; it < 300 && d.eval(mu_hat, hi) < epsilon; ++it)
        hi = mu_hat + 2.0 * (hi - mu_hat);
      return hi;
    }
  }
}

// Left bracket for the lower index.
double lower_bracket(const Divergence& d, double mu_hat, double epsilon) {
  switch (d.family()) {
    case Family::kBernoulli:
      return std::max(0.0, mu_hat - std::sqrt(epsilon / 2.0));
    case Family::kBinomial:
      return std::max(0.0, mu_hat - std::sqrt(d.param() * epsilon / 2.0));
    case Family::kPoisson:
    case Family::kNegBinomial:
    case Family::kGamma:
      return 0.0;  // d(mu_hat, 0) = +inf for mu_hat > 0
    default: {
      double lo = mu_hat - 1.0;
      for (int it = 0; it < 300 && d.eval(mu_hat, lo) < epsilon; ++it)
        lo = mu_hat - 2.0 * (mu_hat - lo);
      return lo;
    }
  }
}

}  // namespace

double kl_index_bracketed(const Divergence& d, double mu_hat, double epsilon) {
  validate_inputs(d, mu_hat, epsilon, "kl_index");
  if (epsilon == 0.0) return mu_hat;
  if (mu_hat == d.mu_hi()) return mu_hat;
  const double hi = upper_bracket(d, mu_hat, epsilon);
  return solve_boundary(d, mu_hat, epsilon, mu_hat, hi);
}

double kl_index(const Divergence& d, double mu_hat, double epsilon) {
  validate_inputs(d, mu_hat, epsilon, "kl_index");
  switch (d.family()) {
    case Family::kGaussian:
      return mu_hat + std::sqrt(2.0 * d.param() * epsilon);
    case Family::kQuadratic:
      return mu_hat + std::sqrt(epsilon / d.param());
    default:
      return kl_index_bracketed(d, mu_hat, epsilon);
  }
}

double kl_lower_index(const Divergence& d, double mu_hat, double epsilon) {
  validate_inputs(d, mu_hat, epsilon, "kl_lower_index");
  switch (d.family()) {
    case Family::kGaussian:
      return mu_hat - std::sqrt(2.0 * d.param() * epsilon);
    case Family::kQuadratic:
      return mu_hat - std::sqrt(epsilon / d.param());
    default:
      break;
  }
  if (epsilon == 0.0) return mu_hat;
  if (mu_hat == d.mu_lo()) return mu_hat;
  const double lo = lower_bracket(d, mu_hat, epsilon);
  return solve_boundary(d, mu_hat, epsilon, mu_hat, lo);
}

}  // namespace klucb
