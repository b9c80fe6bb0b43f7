#include "klucb/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "klucb/analysis.hpp"
#include "klucb/config.hpp"
#include "klucb/simulator.hpp"

namespace klucb {

namespace {

// CSV floats carry 9 significant digits.
std::string fmt9(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.9g", x);
  return buffer;
}

// Renders through a string so the output file appears in one write.
void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("failed to write to stdout");
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path +
                                     "'");
  out << text;
  out.flush();
  if (!out)
    throw std::runtime_error("failed to write output file '" + out_path +
                             "'");
}

// Exit-status policy shared by the commands: invalid configurations (both
// parse errors and mathematically inadmissible requests) exit with 2,
// everything else that throws exits with 3.
int guarded(const char* command, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << command << ": config error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << command << ": config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << command << ": error: " << e.what() << "\n";
    return 3;
  }
}

ScenarioConfig load_scenario(const CommandOptions& options) {
  ScenarioConfig config = interpret_scenario(read_config_file(options.config_path));
  if (options.paper_scale) {
    constexpr int kFactor = 50;
    if (config.scenario.replications >
        std::numeric_limits<int>::max() / kFactor)
      throw ConfigError("paper-scale replication count overflows");
    config.scenario.replications *= kFactor;
  }
  return config;
}

// Policies ordered by canonical name, the row order of the CSV outputs.
std::vector<PolicySpec> sorted_policies(const ScenarioConfig& config) {
  std::vector<PolicySpec> policies = config.policies;
  std::sort(policies.begin(), policies.end(),
            [](const PolicySpec& a, const PolicySpec& b) {
              return a.name() < b.name();
            });
  return policies;
}

}  // namespace

int cmd_run(const CommandOptions& options) {
  return guarded("run", [&] {
    const ScenarioConfig config = load_scenario(options);
    const Scenario& scenario = config.scenario;
    scenario.validate();
    const double lb_constant =
        lower_bound_constant(scenario.arms, scenario.rescale_bound);
    std::vector<double> lb(scenario.checkpoints.size());
    for (std::size_t c = 0; c < scenario.checkpoints.size(); ++c)
      lb[c] = lb_constant *
              std::max(0.0, std::log(static_cast<double>(
                                scenario.checkpoints[c])));
    std::string out =
        "checkpoint,policy,mean_regret,q0005,q0995,q09995,lower_bound\n";
    for (const PolicySpec& policy : sorted_policies(config)) {
      const RegretSummary summary =
          run_monte_carlo(policy, scenario, options.threads);
      const std::string name = policy.name();
      for (std::size_t c = 0; c < summary.checkpoints.size(); ++c) {
        out += std::to_string(summary.checkpoints[c]);
        out += ',' + name;
        out += ',' + fmt9(summary.mean_regret[c]);
        out += ',' + fmt9(summary.q0005[c]);
        out += ',' + fmt9(summary.q0995[c]);
        out += ',' + fmt9(summary.q09995[c]);
        out += ',' + fmt9(lb[c]);
        out += '\n';
      }
    }
    write_output(options.out_path, out);
  });
}

int cmd_bounds(const CommandOptions& options) {
  return guarded("bounds", [&] {
    const ScenarioConfig config = load_scenario(options);
    const Scenario& scenario = config.scenario;
    const double bound_scale = scenario.rescale_bound;
    const double mu_star = scenario.best_mean();
    std::string out = "arm,term,value\n";
    auto emit = [&out](std::size_t arm_index, const std::string& term,
                       double value) {
      out += std::to_string(arm_index + 1);  // arms are numbered from 1
      out += ',' + term;
      out += ',' + fmt9(value);
      out += '\n';
    };
    auto emit_report = [&](std::size_t arm_index, const std::string& policy,
                           const BoundReport& report, double raw_gap) {
      emit(arm_index, policy + "/leading", report.leading_term);
      for (const BoundTerm& term : report.remainder_terms)
        emit(arm_index, policy + "/" + term.label, term.value);
      emit(arm_index, policy + "/total", report.total_bound);
      emit(arm_index, policy + "/regret_contribution",
           raw_gap * report.total_bound);
    };
    for (const PolicySpec& policy : sorted_policies(config)) {
      const std::string name = policy.name();
      for (std::size_t a = 0; a < scenario.arms.size(); ++a) {
        const double mu_a = scenario.arms[a].true_mean();
        if (mu_a >= mu_star) continue;  // bounds concern suboptimal arms
        const double raw_gap = mu_star - mu_a;
        switch (policy.kind) {
          case PolicyKind::kKlUcb: {
            const Divergence& d = *policy.divergence;
            const bool rescaled = d.family() == Family::kBernoulli ||
                                  d.family() == Family::kQuadratic;
            const double lo = rescaled ? mu_a / bound_scale : mu_a;
            const double hi = rescaled ? mu_star / bound_scale : mu_star;
            emit_report(a, name, thm1_bound(scenario.horizon, lo, hi, d),
                        raw_gap);
            break;
          }
          case PolicyKind::kUcb:
          case PolicyKind::kUcbCor2:
            // The index coincides with the quadratic-divergence index, so
            // the matching finite-time display is evaluated on the rescaled
            // means.
            emit_report(a, name,
                        thm1_bound(scenario.horizon, mu_a / bound_scale,
                                   mu_star / bound_scale,
                                   Divergence::quadratic(2.0)),
                        raw_gap);
            break;
          case PolicyKind::kEmpiricalKlUcb: {
            // Leading term of the nonparametric bound; only available when
            // the arm's law has finite support.
            if (scenario.arms[a].kind() ==
                    ArmModel::Kind::kTruncatedExponential ||
                scenario.arms[a].kind() == ArmModel::Kind::kGaussian)
              break;
            const double k =
                bounded_kinf(scenario.arms[a], mu_star, bound_scale);
            const double leading = el_leading_term(scenario.horizon, k);
            emit(a, name + "/leading", leading);
            emit(a, name + "/regret_contribution", raw_gap * leading);
            break;
          }
          case PolicyKind::kUcbV:
          case PolicyKind::kUcbTuned:
            break;  // no finite-time display is implemented for these
        }
      }
    }
    write_output(options.out_path, out);
  });
}

int cmd_check(const CommandOptions& options) {
  return guarded("check", [&] {
    const CheckConfig config =
        interpret_check(read_config_file(options.config_path));
    CheckResult result;
    if (config.kind == CheckConfig::Kind::kDeviation) {
      result = deviation_check(*config.divergence, config.mu_star, config.t,
                               config.epsilon, config.samples, config.seed,
                               options.threads);
    } else {
      result = coverage_check(*config.arm, config.n, config.epsilon,
                              config.samples, config.seed, options.threads);
    }
    std::string out;
    out += "empirical," + fmt9(result.empirical_prob) + "\n";
    out += "bound," + fmt9(result.bound) + "\n";
    if (result.vacuous) out += "vacuous,1\n";
    write_output(options.out_path, out);
  });
}

}  // namespace klucb
