// Acceptance harness: replays the headline experiments and equivalences at
// reduced replication counts and prints one PASS/FAIL line per criterion.
// Exit status is 0 when every selected criterion passes, 1 otherwise.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "klucb/analysis.hpp"
#include "klucb/divergence.hpp"
#include "klucb/empirical.hpp"
#include "klucb/environment.hpp"
#include "klucb/exploration.hpp"
#include "klucb/index.hpp"
#include "klucb/policy.hpp"
#include "klucb/rng.hpp"
#include "klucb/simulator.hpp"
#include "oracles.hpp"

using namespace klucb;

namespace {

int g_failures = 0;
std::chrono::steady_clock::time_point g_start;

void begin() { g_start = std::chrono::steady_clock::now(); }

void report(int id, bool pass, const std::string& detail) {
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start)
          .count();
  std::printf("%s criterion %d: %s [%.1fs]\n", pass ? "PASS" : "FAIL", id,
              detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof buffer, format, args);
  va_end(args);
  return buffer;
}

int thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Mean and standard error of the final-checkpoint values across replications.
struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe final_mean_se(const std::vector<std::vector<double>>& rows) {
  const double n = static_cast<double>(rows.size());
  double sum = 0.0;
  for (const auto& row : rows) sum += row.back();
  const double mean = sum / n;
  double ss = 0.0;
  for (const auto& row : rows) {
    const double d = row.back() - mean;
    ss += d * d;
  }
  MeanSe out;
  out.mean = mean;
  out.se = n > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  return out;
}

double final_mean(const PolicySpec& spec, const Scenario& scenario,
                  int threads) {
  return final_mean_se(run_replications(spec, scenario, threads)).mean;
}

Scenario ten_arm_scenario(std::int64_t horizon, int reps,
                          std::uint64_t seed) {
  Scenario s;
  s.arms.push_back(ArmModel::bernoulli(0.1));
  for (double p : {0.05, 0.05, 0.05, 0.02, 0.02, 0.02, 0.01, 0.01, 0.01})
    s.arms.push_back(ArmModel::bernoulli(p));
  s.horizon = horizon;
  s.replications = reps;
  s.master_seed = seed;
  s.rescale_bound = 1.0;
  s.checkpoints = {horizon};
  return s;
}

// ---------------------------------------------------------------------------
// Criteria 1 and 2 share the ten-arm Bernoulli run: the divergence-index
// policy must beat plain UCB by a wide margin and sit close to the
// asymptotic lower-bound line.
// ---------------------------------------------------------------------------
void criteria_1_and_2(int threads) {
  constexpr double kMaxRatioVsUcb = 0.6;
  constexpr double kLowerBoundSlack = 1.1;
  constexpr double kFrozenLine20000 = 172.76806486005998;

  begin();
  const Scenario s = ten_arm_scenario(20000, 1000, 9001);
  const double klucb_mean = final_mean(
      PolicySpec::klucb(Divergence::bernoulli(), ExplorationSchedule::log_t()),
      s, threads);
  const double ucb_mean = final_mean(PolicySpec::ucb(), s, threads);
  report(1, klucb_mean <= kMaxRatioVsUcb * ucb_mean,
         fmt("ten-arm Bernoulli T=20000 N=1000: klucb mean regret %.3f vs "
             "ucb %.3f (ratio %.3f <= %.2f)",
             klucb_mean, ucb_mean, klucb_mean / ucb_mean, kMaxRatioVsUcb));

  begin();
  const double line = lower_bound_line(s.arms, s.rescale_bound, 20000);
  const bool line_ok =
      std::fabs(line - kFrozenLine20000) <= 1e-9 * kFrozenLine20000;
  report(2, line_ok && klucb_mean <= kLowerBoundSlack * line,
         fmt("same run: klucb mean regret %.3f <= %.2f x lower-bound line "
             "%.3f at T=20000%s",
             klucb_mean, kLowerBoundSlack, line,
             line_ok ? "" : " (line drifted from frozen value)"));
}

// ---------------------------------------------------------------------------
// Criterion 3: the finite-time expected-pulls bound holds in Monte Carlo.
// ---------------------------------------------------------------------------
void criterion_3(int threads) {
  constexpr double kFrozenTotal = 2897.983365961908;
  constexpr double kGap = 0.1;

  begin();
  Scenario s;
  s.arms = {ArmModel::bernoulli(0.6), ArmModel::bernoulli(0.5)};
  s.horizon = 5000;
  s.replications = 500;
  s.master_seed = 9003;
  s.rescale_bound = 1.0;
  s.checkpoints = {5000};
  const auto rows = run_replications(
      PolicySpec::klucb(Divergence::bernoulli(),
                        ExplorationSchedule::log_plus_3loglog()),
      s, threads);
  const MeanSe regret = final_mean_se(rows);
  const double mean_pulls = regret.mean / kGap;
  const double se_pulls = regret.se / kGap;
  const auto bound = thm1_bound(5000, 0.5, 0.6, Divergence::bernoulli());
  const bool frozen_ok =
      std::fabs(bound.total_bound - kFrozenTotal) <= 1e-9 * kFrozenTotal;
  report(3,
         frozen_ok && mean_pulls <= bound.total_bound + 3.0 * se_pulls,
         fmt("Bernoulli(0.5,0.6) T=5000 N=500: mean suboptimal pulls %.1f "
             "(se %.1f) <= bound %.1f + 3se%s",
             mean_pulls, se_pulls, bound.total_bound,
             frozen_ok ? "" : " (bound drifted from frozen value)"));
}

// ---------------------------------------------------------------------------
// Criterion 4: plain UCB and the quadratic-divergence index policy make
// identical decisions on every stream.
// ---------------------------------------------------------------------------
void criterion_4() {
  begin();
  Scenario s;
  for (double p : {0.3, 0.42, 0.48, 0.55, 0.6})
    s.arms.push_back(ArmModel::bernoulli(p));
  s.horizon = 500;
  s.replications = 100;
  s.master_seed = 9004;
  s.rescale_bound = 1.0;
  s.checkpoints = {500};
  const auto ucb = PolicySpec::ucb();
  const auto quad = PolicySpec::klucb(Divergence::quadratic(2.0),
                                      ExplorationSchedule::log_t());
  std::int64_t mismatches = 0;
  for (int rep = 0; rep < s.replications; ++rep) {
    const auto a = action_sequence(ucb, s, rep);
    const auto b = action_sequence(quad, s, rep);
    for (std::size_t t = 0; t < a.size(); ++t)
      if (a[t] != b[t]) ++mismatches;
  }
  report(4, mismatches == 0,
         fmt("ucb vs klucb-quadratic:2 on 100 streams of length 500: %lld "
             "action mismatches",
             static_cast<long long>(mismatches)));
}

// ---------------------------------------------------------------------------
// Criterion 5: on {0,1} data the empirical-likelihood index coincides with
// the Bernoulli divergence index: same actions, same index values to 1e-9.
// ---------------------------------------------------------------------------
void criterion_5() {
  constexpr double kIndexTolerance = 1e-9;

  begin();
  const std::vector<ArmModel> arms = {ArmModel::bernoulli(0.2),
                                      ArmModel::bernoulli(0.5),
                                      ArmModel::bernoulli(0.6)};
  const int num_arms = static_cast<int>(arms.size());
  const std::int64_t horizon = 500;
  std::int64_t mismatches = 0;
  double max_index_diff = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    PolicyState ber(
        PolicySpec::klucb(Divergence::bernoulli(),
                          ExplorationSchedule::log_t()),
        num_arms, 1.0);
    PolicyState emp(PolicySpec::empirical_klucb(ExplorationSchedule::log_t()),
                    num_arms, 1.0);
    std::vector<Rng> streams;
    for (int a = 0; a < num_arms; ++a)
      streams.emplace_back(stream_seed(9005, static_cast<std::uint64_t>(rep),
                                       static_cast<std::uint64_t>(a)));
    for (std::int64_t round = 1; round <= horizon; ++round) {
      const int choice_ber = ber.select_arm();
      const int choice_emp = emp.select_arm();
      if (choice_ber != choice_emp) ++mismatches;
      // Both policies are fed the same trajectory so the index comparison
      // stays on identical histories even after a hypothetical mismatch.
      const double reward =
          arms[static_cast<std::size_t>(choice_ber)].sample(
              streams[static_cast<std::size_t>(choice_ber)]);
      ber.update(choice_ber, reward);
      emp.update(choice_ber, reward);
      if (round >= num_arms)
        for (int a = 0; a < num_arms; ++a)
          max_index_diff =
              std::max(max_index_diff, std::fabs(ber.compute_index(a) -
                                                 emp.compute_index(a)));
    }
  }
  report(5, mismatches == 0 && max_index_diff <= kIndexTolerance,
         fmt("klucb-bernoulli vs empklucb on 100 {0,1} streams: %lld action "
             "mismatches, max index difference %.2e (tol %.0e)",
             static_cast<long long>(mismatches), max_index_diff,
             kIndexTolerance));
}

// ---------------------------------------------------------------------------
// Criterion 6: the library solvers agree with the independent simplex-descent
// oracle on random small-support distributions.
// ---------------------------------------------------------------------------
void criterion_6() {
  constexpr double kTolerance = 2e-4;
  constexpr int kInstances = 1000;

  begin();
  Rng rng(stream_seed(9006, 0));
  double max_kinf_diff = 0.0;
  double max_el_diff = 0.0;
  for (int trial = 0; trial < kInstances; ++trial) {
    const int num_atoms = 1 + static_cast<int>(rng.uniform01() * 3.0);
    std::vector<double> values;
    std::vector<std::int64_t> counts;
    for (int i = 0; i < num_atoms; ++i) {
      double v = rng.uniform01();
      if (rng.uniform01() < 0.25) v = rng.uniform01() < 0.5 ? 0.0 : 1.0;
      const bool fresh =
          std::none_of(values.begin(), values.end(),
                       [&](double w) { return std::fabs(w - v) < 1e-9; });
      if (!fresh) continue;
      values.push_back(v);
      counts.push_back(1 + static_cast<std::int64_t>(rng.uniform01() * 20.0));
    }
    if (values.empty()) {
      values.push_back(0.5);
      counts.push_back(1);
    }
    std::int64_t total = 0;
    for (std::int64_t c : counts) total += c;
    std::vector<double> weights;
    double mean = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      weights.push_back(static_cast<double>(counts[i]) /
                        static_cast<double>(total));
      mean += values[i] * weights.back();
    }

    // Hardness value at a target above the mean.
    const double mu = mean + (0.02 + 0.94 * rng.uniform01()) * (0.98 - mean);
    if (mu > mean && mu < 1.0) {
      const double lib = kinf_weighted(values, weights, mu);
      const double ref = oracle::kinf_descent(values, weights, mu);
      max_kinf_diff = std::max(max_kinf_diff, std::fabs(lib - ref));
    }

    // Upper-confidence value at a random radius.
    const double epsilon = 0.05 + 0.75 * rng.uniform01();
    EmpiricalDistribution dist;
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::int64_t c = 0; c < counts[i]; ++c) dist.add(values[i]);
    const double lib_el = el_upper_bound(dist, epsilon);
    const double ref_el = oracle::el_by_kinf(values, weights, epsilon);
    max_el_diff = std::max(max_el_diff, std::fabs(lib_el - ref_el));
  }
  report(6, max_kinf_diff <= kTolerance && max_el_diff <= kTolerance,
         fmt("1000 random <=3-point laws vs descent oracle: max hardness "
             "diff %.2e, max upper-bound diff %.2e (tol %.0e)",
             max_kinf_diff, max_el_diff, kTolerance));
}

// ---------------------------------------------------------------------------
// Criterion 7: coverage of the empirical-likelihood upper bound in five
// settings, 1e5 samples each.
// ---------------------------------------------------------------------------
void criterion_7(int threads) {
  constexpr std::int64_t kSamples = 100000;

  begin();
  struct Setting {
    const char* label;
    ArmModel nu0;
    int n;
    double epsilon;
    double frozen_bound;
  };
  std::vector<double> beta_values, beta_weights;
  {
    double total = 0.0;
    for (int k = 0; k < 64; ++k) {
      const double x = (k + 0.5) / 64.0;
      beta_values.push_back(x);
      beta_weights.push_back(x * (1.0 - x));
      total += beta_weights.back();
    }
    for (double& w : beta_weights) w /= total;
  }
  const Setting settings[] = {
      {"bernoulli(0.5) n=50 eps=0.2", ArmModel::bernoulli(0.5), 50, 0.2,
       0.006417309812507336},
      {"bernoulli(0.3) n=30 eps=0.25", ArmModel::bernoulli(0.3), 30, 0.25,
       0.04811005417528232},
      {"3-point n=40 eps=0.2",
       ArmModel::finite_support({0.1, 0.5, 0.9}, {0.3, 0.4, 0.3}), 40, 0.2,
       0.03829904255328968},
      {"64-atom bell n=25 eps=0.3",
       ArmModel::finite_support(beta_values, beta_weights), 25, 0.3,
       0.04059285821039446},
      {"2-point n=60 eps=0.15",
       ArmModel::finite_support({0.2, 0.8}, {0.5, 0.5}), 60, 0.15,
       0.020798682929955736},
  };
  bool all_ok = true;
  std::string detail;
  int seed = 9007;
  for (const auto& setting : settings) {
    const CheckResult r = coverage_check(setting.nu0, setting.n,
                                         setting.epsilon, kSamples,
                                         static_cast<std::uint64_t>(seed++),
                                         threads);
    const bool frozen_ok = std::fabs(r.bound - setting.frozen_bound) <=
                           1e-12 * setting.frozen_bound;
    const double se =
        std::sqrt(r.bound * (1.0 - r.bound) / static_cast<double>(kSamples));
    const bool ok = frozen_ok && !r.vacuous &&
                    r.empirical_prob <= r.bound + 3.0 * se;
    all_ok = all_ok && ok;
    if (!detail.empty()) detail += "; ";
    detail += fmt("%s: %.5f <= %.5f%s", setting.label, r.empirical_prob,
                  r.bound, ok ? "" : " VIOLATED");
  }
  report(7, all_ok, "coverage in 5 settings, 1e5 samples: " + detail);
}

// ---------------------------------------------------------------------------
// Criterion 8: the self-normalized deviation bound holds on 1e5 streams.
// ---------------------------------------------------------------------------
void criterion_8(int threads) {
  constexpr double kFrozenBound = 0.05106539007105291;

  begin();
  const CheckResult r = deviation_check(Divergence::bernoulli(), 0.5, 1000,
                                        8.0, 100000, 9008, threads);
  const bool frozen_ok =
      std::fabs(r.bound - kFrozenBound) <= 1e-12 * kFrozenBound;
  report(8, frozen_ok && !r.vacuous && r.empirical_prob <= r.bound,
         fmt("Bernoulli mu*=0.5 t=1000 eps=8 on 1e5 streams: empirical "
             "%.5f <= bound %.5f%s",
             r.empirical_prob, r.bound,
             frozen_ok ? "" : " (bound drifted from frozen value)"));
}

// ---------------------------------------------------------------------------
// Criterion 9: censored-Poisson scenario ordering with >=10% margins.
// ---------------------------------------------------------------------------
void criterion_9(int threads) {
  constexpr double kMargin = 0.9;
  constexpr double kPoissonVsUcb = 0.25;

  begin();
  Scenario s;
  for (int a = 1; a <= 6; ++a)
    s.arms.push_back(ArmModel::truncated_poisson((2.0 + a) / 4.0, 10.0));
  s.horizon = 20000;
  s.replications = 200;
  s.master_seed = 9009;
  s.rescale_bound = 10.0;
  s.checkpoints = {20000};
  const auto logt = ExplorationSchedule::log_t();
  const double pois =
      final_mean(PolicySpec::klucb(Divergence::poisson(), logt), s, threads);
  const double emp =
      final_mean(PolicySpec::empirical_klucb(logt), s, threads);
  const double ber =
      final_mean(PolicySpec::klucb(Divergence::bernoulli(), logt), s, threads);
  const double ucb = final_mean(PolicySpec::ucb(), s, threads);
  const bool ok = pois <= kMargin * emp && emp <= kMargin * ber &&
                  ber <= kMargin * ucb && pois <= kPoissonVsUcb * ucb;
  report(9, ok,
         fmt("six censored-Poisson arms T=20000 N=200: regrets poisson "
             "%.1f < empirical %.1f < bernoulli(rescaled) %.1f < ucb %.1f "
             "(10%% margins, poisson <= %.2f x ucb)",
             pois, emp, ber, ucb, kPoissonVsUcb));
}

// ---------------------------------------------------------------------------
// Criterion 10: censored-exponential scenario, both adapted policies at
// most half of UCB's regret.
// ---------------------------------------------------------------------------
void criterion_10(int threads) {
  constexpr double kMaxRatio = 0.5;

  begin();
  Scenario s;
  for (double rate : {0.2, 0.25, 1.0 / 3.0, 0.5, 1.0})
    s.arms.push_back(ArmModel::truncated_exponential(rate, 10.0));
  s.horizon = 20000;
  s.replications = 200;
  s.master_seed = 9010;
  s.rescale_bound = 10.0;
  s.checkpoints = {20000};
  const auto logt = ExplorationSchedule::log_t();
  const double gamma1 =
      final_mean(PolicySpec::klucb(Divergence::gamma(1.0), logt), s, threads);
  const double emp =
      final_mean(PolicySpec::empirical_klucb(logt), s, threads);
  const double ucb = final_mean(PolicySpec::ucb(), s, threads);
  report(10, gamma1 <= kMaxRatio * ucb && emp <= kMaxRatio * ucb,
         fmt("five censored-exponential arms T=20000 N=200: regrets "
             "exponential-index %.1f, empirical %.1f, ucb %.1f (each "
             "adapted policy <= %.1f x ucb)",
             gamma1, emp, ucb, kMaxRatio));
}

// ---------------------------------------------------------------------------
// Criterion 11: condensed property sweep over the module invariants.
// ---------------------------------------------------------------------------
void criterion_11() {
  begin();
  std::int64_t violations = 0;
  auto expect_at = [&violations](bool ok, int line) {
    if (!ok && ++violations <= 8)
      std::fprintf(stderr, "criterion 11 violation at line %d\n", line);
  };
#define EXPECT11(cond) expect_at((cond), __LINE__)

  // Divergences: zero exactly on the diagonal, positive off it, increasing
  // in the second argument above the diagonal, Pinsker for Bernoulli, and
  // first derivatives that match central differences.
  {
    struct Case {
      Divergence d;
      std::vector<double> grid;
    };
    const Case cases[] = {
        {Divergence::bernoulli(), {0.05, 0.3, 0.5, 0.7, 0.95}},
        {Divergence::poisson(), {0.2, 1.0, 2.5, 6.0}},
        {Divergence::binomial(5.0), {0.5, 2.0, 4.5}},
        {Divergence::neg_binomial(3.0), {0.5, 2.0, 5.0}},
        {Divergence::gaussian(0.5), {-1.0, 0.0, 2.0}},
        {Divergence::gamma(2.0), {0.5, 1.5, 4.0}},
        {Divergence::quadratic(2.0), {0.1, 0.5, 0.9}},
    };
    for (const auto& c : cases) {
      for (double x : c.grid) {
        EXPECT11(c.d.eval(x, x) == 0.0);
        for (double y : c.grid) {
          if (x == y) continue;
          EXPECT11(c.d.eval(x, y) > 0.0);
        }
        // Monotone in the second argument above the diagonal.
        double prev = 0.0;
        for (double step : {0.01, 0.02, 0.04, 0.08}) {
          const double y = x + step * (std::fabs(x) + 1.0);
          if (y >= c.d.mu_hi()) break;
          const double v = c.d.eval(x, y);
          EXPECT11(v > prev);
          prev = v;
          // Derivative in the first argument vs central difference.
          const double h = 1e-5 * (std::fabs(x) + 1.0);
          if (x - h > c.d.mu_lo() && x + h < c.d.mu_hi()) {
            const double numeric =
                (c.d.eval(x + h, y) - c.d.eval(x - h, y)) / (2.0 * h);
            const double exact = c.d.deriv_first(x, y);
            EXPECT11(std::fabs(numeric - exact) <=
                   1e-5 * (1.0 + std::fabs(exact)));
          }
        }
      }
    }
    const auto ber = Divergence::bernoulli();
    for (double p : {0.1, 0.4, 0.7})
      for (double q : {0.2, 0.5, 0.9})
        EXPECT11(ber.eval(p, q) >= 2.0 * (p - q) * (p - q) - 1e-15);
  }

  // Index solver: inverse consistency and monotonicity in both arguments.
  {
    const Divergence families[] = {Divergence::bernoulli(),
                                   Divergence::poisson(),
                                   Divergence::gamma(1.0)};
    for (const auto& d : families) {
      const double mus[] = {0.2, 0.5, 0.8};
      const double epss[] = {0.05, 0.2, 0.8, 2.0};
      for (double mu : mus) {
        double prev_u = mu;
        for (double eps : epss) {
          const double u = kl_index(d, mu, eps);
          EXPECT11(u >= prev_u - 1e-12);
          prev_u = u;
          if (u < d.mu_hi() - 1e-9)
            EXPECT11(d.eval(mu, u) <= eps * (1.0 + 1e-9) + 1e-12);
        }
        const double lower = kl_lower_index(d, mu, 0.3);
        EXPECT11(lower <= mu);
        if (lower > d.mu_lo() + 1e-12)
          EXPECT11(d.eval(mu, lower) <= 0.3 * (1.0 + 1e-9) + 1e-12);
      }
      EXPECT11(kl_index(d, 0.5, 0.3) <= kl_index(d, 0.6, 0.3) + 1e-12);
    }
  }

  // Hardness solver: dual stationarity certificates on random laws, and
  // duality between the hardness and the upper-confidence value.
  {
    Rng rng(stream_seed(9011, 0));
    for (int trial = 0; trial < 200; ++trial) {
      EmpiricalDistribution dist;
      const int atoms = 1 + static_cast<int>(rng.uniform01() * 3.0);
      for (int i = 0; i < atoms; ++i) {
        const double v =
            rng.uniform01() < 0.2 ? (rng.uniform01() < 0.5 ? 0.0 : 1.0)
                                  : rng.uniform01();
        const auto copies = 1 + static_cast<int>(rng.uniform01() * 5.0);
        for (int c = 0; c < copies; ++c) dist.add(v);
      }
      const double mean = dist.mean();
      const double mu = mean + (0.05 + 0.9 * rng.uniform01()) * (0.97 - mean);
      if (mu <= mean || mu >= 1.0) continue;
      const KinfResult r = kinf_detailed(dist, mu);
      EXPECT11(r.value >= 0.0);
      if (r.at_boundary) {
        EXPECT11(r.gradient >= -1e-7);
        EXPECT11(dist.weight_at_one() == 0.0 || r.value == 0.0 ||
               std::fabs(r.lambda - 1.0 / (1.0 - mu)) <= 1e-6);
      } else {
        EXPECT11(std::fabs(r.gradient) <= 1e-6);
      }
      // Duality: at the upper-confidence value the hardness spends the
      // whole radius. Skipped near the right edge, where the comparison is
      // ill-conditioned (the dual multiplier blows up as 1/(1-u)).
      const double eps = 0.05 + 0.6 * rng.uniform01();
      const double u = el_upper_bound(dist, eps);
      if (u > mean + 1e-6 && u < 0.999)
        EXPECT11(std::fabs(kinf(dist, u) - eps) <= 1e-6);
    }
  }

  // Simulator: bit-identical reruns, thread-count invariance.
  {
    Scenario s;
    s.arms = {ArmModel::bernoulli(0.6), ArmModel::bernoulli(0.4)};
    s.horizon = 300;
    s.replications = 5;
    s.master_seed = 9012;
    s.rescale_bound = 1.0;
    s.checkpoints = default_checkpoints(300);
    const auto spec = PolicySpec::klucb(Divergence::bernoulli(),
                                        ExplorationSchedule::log_t());
    const auto r1 = run_replications(spec, s, 1);
    const auto r2 = run_replications(spec, s, 1);
    const auto r3 = run_replications(spec, s, 3);
    EXPECT11(r1 == r2);
    EXPECT11(r1 == r3);
    for (int rep = 0; rep < 5; ++rep)
      EXPECT11(r1[static_cast<std::size_t>(rep)] == run_single(spec, s, rep));
  }

  report(11, violations == 0,
         fmt("condensed property sweep (divergence, index, hardness "
             "duality, simulator determinism): %lld violations",
             static_cast<long long>(violations)));
#undef EXPECT11
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select a subset of criteria by number (1 and 2 share
  // one run and are selected together). No arguments runs all of them.
  bool wanted[12];
  const bool all = argc <= 1;
  for (bool& w : wanted) w = all;
  for (int i = 1; i < argc; ++i) {
    const int id = std::atoi(argv[i]);
    if (id < 1 || id > 11) {
      std::fprintf(stderr, "unknown criterion: %s\n", argv[i]);
      return 2;
    }
    wanted[id] = true;
  }
  const int threads = thread_count();
  std::printf("acceptance: %d worker thread(s)\n", threads);
  std::fflush(stdout);
  int selected = 0;
  if (wanted[1] || wanted[2]) {
    criteria_1_and_2(threads);
    selected += 2;
  }
  if (wanted[3]) criterion_3(threads), ++selected;
  if (wanted[4]) criterion_4(), ++selected;
  if (wanted[5]) criterion_5(), ++selected;
  if (wanted[6]) criterion_6(), ++selected;
  if (wanted[7]) criterion_7(threads), ++selected;
  if (wanted[8]) criterion_8(threads), ++selected;
  if (wanted[9]) criterion_9(threads), ++selected;
  if (wanted[10]) criterion_10(threads), ++selected;
  if (wanted[11]) criterion_11(), ++selected;
  std::printf("acceptance: %d of %d criteria failed\n", g_failures, selected);
  return g_failures > 0 ? 1 : 0;
}
