#pragma once

#include "klucb/divergence.hpp"

namespace klucb {

// Upper-confidence index
//   U = sup { mu in [mu_lo, mu_hi] : d(mu_hat, mu) <= epsilon },
// the largest mean still compatible with the empirical mean mu_hat at
// divergence budget epsilon. Returns a value within 1e-10 of the supremum
// (in mean units) on its feasible side: d(mu_hat, U) <= epsilon.
// Gaussian and Quadratic use their closed forms; everything else is a
// safeguarded Newton/bisection root-find inside a proven bracket.
// Throws std::domain_error on mu_hat outside the closed interval, non-finite
// inputs, or epsilon < 0.
double kl_index(const Divergence& d, double mu_hat, double epsilon);

// The generic bracketed root-finder behind kl_index, usable on every family
// (including the closed-form ones; kept callable so tests can compare the
// two paths).
double kl_index_bracketed(const Divergence& d, double mu_hat, double epsilon);

// Lower counterpart: inf { mu : d(mu_hat, mu) <= epsilon }, the smallest
// mean still compatible with mu_hat at budget epsilon. Same accuracy and
// error contract as kl_index; d(mu_hat, result) <= epsilon.
double kl_lower_index(const Divergence& d, double mu_hat, double epsilon);

}  // namespace klucb
