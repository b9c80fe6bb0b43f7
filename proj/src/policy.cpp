#include "klucb/policy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "klucb/index.hpp"

namespace klucb {

PolicySpec PolicySpec::klucb(const Divergence& d,
                             const ExplorationSchedule& schedule) {
  PolicySpec spec;
  spec.kind = PolicyKind::kKlUcb;
  spec.divergence = d;
  spec.schedule = schedule;
  return spec;
}

PolicySpec PolicySpec::empirical_klucb(const ExplorationSchedule& schedule) {
  PolicySpec spec;
  spec.kind = PolicyKind::kEmpiricalKlUcb;
  spec.schedule = schedule;
  return spec;
}

PolicySpec PolicySpec::ucb() { return {PolicyKind::kUcb, std::nullopt}; }
PolicySpec PolicySpec::ucb_cor2() {
  return {PolicyKind::kUcbCor2, std::nullopt};
}
PolicySpec PolicySpec::ucb_v() { return {PolicyKind::kUcbV, std::nullopt}; }
PolicySpec PolicySpec::ucb_tuned() {
  return {PolicyKind::kUcbTuned, std::nullopt};
}

std::string PolicySpec::name() const {
  switch (kind) {
    case PolicyKind::kKlUcb:
      return "klucb-" + divergence->name() + "-" + schedule.name();
    case PolicyKind::kEmpiricalKlUcb:
      return "empklucb-" + schedule.name();
    case PolicyKind::kUcb:
      return "ucb";
    case PolicyKind::kUcbCor2:
      return "ucb-cor2";
    case PolicyKind::kUcbV:
      return "ucbv";
    case PolicyKind::kUcbTuned:
      return "ucbtuned";
  }
  return "";
}

namespace {

bool uses_unit_scale(const PolicySpec& spec) {
  if (spec.kind == PolicyKind::kEmpiricalKlUcb) return true;
  if (spec.kind != PolicyKind::kKlUcb) return false;
  const Family f = spec.divergence->family();
  return f == Family::kBernoulli || f == Family::kQuadratic;
}

}  // namespace

PolicyState::PolicyState(const PolicySpec& spec, int num_arms,
                         double rescale_bound)
    : spec_(spec),
      num_arms_(num_arms),
      rescale_bound_(rescale_bound),
      rescaled_(uses_unit_scale(spec)) {
  if (num_arms < 1) throw std::domain_error("policy: needs at least one arm");
  if (!std::isfinite(rescale_bound) || rescale_bound <= 0.0)
    throw std::domain_error("policy: rescale_bound must be finite positive");
  if (spec.kind == PolicyKind::kKlUcb && !spec.divergence.has_value())
    throw std::domain_error("policy: klucb needs a divergence");
  pulls_.assign(num_arms, 0);
  sum_.assign(num_arms, 0.0);
  sumsq_.assign(num_arms, 0.0);
  if (spec.kind == PolicyKind::kEmpiricalKlUcb) {
    dists_.resize(num_arms);
    el_eta_hints_.assign(num_arms,
                         std::numeric_limits<double>::quiet_NaN());
  }
}

void PolicyState::update(int arm, double raw_reward) {
  if (arm < 0 || arm >= num_arms_)
    throw std::domain_error("update: arm out of range");
  if (!(raw_reward >= 0.0 && raw_reward <= rescale_bound_))
    throw std::domain_error("update: reward outside [0, rescale_bound]");
  const double y = rescaled_ ? raw_reward / rescale_bound_ : raw_reward;
  ++t_;
  ++pulls_[arm];
  sum_[arm] += y;
  sumsq_[arm] += y * y;
  if (spec_.kind == PolicyKind::kEmpiricalKlUcb) dists_[arm].add(y);
}

int PolicyState::select_arm() const {
  if (t_ < num_arms_) return static_cast<int>(t_);
  int best = 0;
  double best_index = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < num_arms_; ++a) {
    const double idx = compute_index(a);
    if (idx > best_index) {
      best_index = idx;
      best = a;
    }
  }
  return best;
}

double PolicyState::compute_index(int arm) const {
  if (arm < 0 || arm >= num_arms_)
    throw std::domain_error("compute_index: arm out of range");
  if (pulls_[arm] < 1)
    throw std::domain_error("compute_index: arm has never been pulled");
  if (t_ < 1) throw std::domain_error("compute_index: no rounds played");
  const double n = static_cast<double>(pulls_[arm]);
  const double mu = mean_of(arm);
  const double b = rescale_bound_;
  switch (spec_.kind) {
    case PolicyKind::kKlUcb: {
      const double eps = spec_.schedule.value(t_) / n;
      const double u = kl_index(*spec_.divergence, mu, eps);
      return rescaled_ ? b * u : u;
    }
    case PolicyKind::kEmpiricalKlUcb: {
      const double eps = spec_.schedule.value(t_) / n;
      const double u =
          el_upper_bound_hinted(dists_[arm], eps, el_eta_hints_[arm]);
      return b * u;
    }
    case PolicyKind::kUcb: {
      const double lt = std::log(static_cast<double>(t_));
      return mu + b * std::sqrt(lt / (2.0 * n));
    }
    case PolicyKind::kUcbCor2: {
      const double f =
          ExplorationSchedule::log_plus_3loglog().value(t_);
      return mu + b * std::sqrt(f / (2.0 * n));
    }
    case PolicyKind::kUcbV: {
      const double lt = std::log(static_cast<double>(t_));
      const double var = std::max(0.0, sumsq_[arm] / n - mu * mu);
      return mu + std::sqrt(2.0 * var * lt / n) + 3.0 * b * lt / n;
    }
    case PolicyKind::kUcbTuned: {
      const double lt = std::log(static_cast<double>(t_));
      const double var = std::max(0.0, sumsq_[arm] / n - mu * mu);
      const double cap = b * b / 4.0;
      const double level =
          std::min(cap, var + b * b * std::sqrt(2.0 * lt / n));
      return mu + std::sqrt(level * lt / n);
    }
  }
  return 0.0;
}

}  // namespace klucb
