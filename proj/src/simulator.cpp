#include "klucb/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "klucb/rng.hpp"

namespace klucb {

namespace {

// Runs fn(0) .. fn(count - 1), distributing indices across worker threads
// through a shared atomic counter. The first exception thrown by any worker
// is rethrown on the calling thread after all workers finish.
void parallel_for(int count, int num_threads,
                  const std::function<void(int)>& fn) {
  if (count <= 0) return;
  if (num_threads > count) num_threads = count;
  if (num_threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(num_threads));
  for (int w = 0; w < num_threads; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

double Scenario::best_mean() const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& arm : arms) best = std::max(best, arm.true_mean());
  return best;
}

std::vector<double> Scenario::gaps() const {
  const double star = best_mean();
  std::vector<double> out(arms.size());
  for (std::size_t a = 0; a < arms.size(); ++a)
    out[a] = star - arms[a].true_mean();
  return out;
}

void Scenario::validate() const {
  if (arms.empty()) throw std::domain_error("scenario: no arms");
  if (horizon < static_cast<std::int64_t>(arms.size()))
    throw std::domain_error("scenario: horizon shorter than the arm count");
  if (replications < 1)
    throw std::domain_error("scenario: replications must be >= 1");
  if (!std::isfinite(rescale_bound) || rescale_bound <= 0.0)
    throw std::domain_error("scenario: rescale_bound must be finite positive");
  for (const auto& arm : arms) {
    if (!(arm.max_value() <= rescale_bound))
      throw std::domain_error(
          "scenario: an arm can exceed rescale_bound (unbounded arms cannot "
          "be simulated)");
    if (arm.kind() == ArmModel::Kind::kFiniteSupport) {
      for (double v : arm.values())
        if (v < 0.0)
          throw std::domain_error("scenario: negative finite-support value");
    }
  }
  if (checkpoints.empty()) throw std::domain_error("scenario: no checkpoints");
  std::int64_t prev = 0;
  for (std::int64_t c : checkpoints) {
    if (c <= prev || c > horizon)
      throw std::domain_error(
          "scenario: checkpoints must be strictly increasing within "
          "[1, horizon]");
    prev = c;
  }
  if (checkpoints.back() != horizon)
    throw std::domain_error("scenario: last checkpoint must equal horizon");
}

std::vector<std::int64_t> default_checkpoints(std::int64_t horizon,
                                              int points) {
  if (horizon < 1) throw std::domain_error("checkpoints: horizon must be >= 1");
  if (points < 1) throw std::domain_error("checkpoints: points must be >= 1");
  std::vector<std::int64_t> out;
  if (horizon <= points) {
    out.resize(static_cast<std::size_t>(horizon));
    for (std::int64_t t = 1; t <= horizon; ++t)
      out[static_cast<std::size_t>(t - 1)] = t;
    return out;
  }
  const double log_t = std::log(static_cast<double>(horizon));
  for (int i = 0; i < points; ++i) {
    const double frac = static_cast<double>(i) / (points - 1);
    auto c = static_cast<std::int64_t>(std::llround(std::exp(frac * log_t)));
    c = std::clamp<std::int64_t>(c, 1, horizon);
    if (out.empty() || c > out.back()) out.push_back(c);
  }
  if (out.back() != horizon) out.push_back(horizon);
  return out;
}

namespace {

// Shared core of run_single / action_sequence: plays one replication,
// optionally recording regret at checkpoints and/or the action sequence.
void play_one(const PolicySpec& spec, const Scenario& scenario,
              int replication_index, std::vector<double>* regret_out,
              std::vector<int>* actions_out) {
  const int num_arms = static_cast<int>(scenario.arms.size());
  PolicyState state(spec, num_arms, scenario.rescale_bound);
  std::vector<Rng> streams;
  streams.reserve(static_cast<std::size_t>(num_arms));
  for (int a = 0; a < num_arms; ++a)
    streams.emplace_back(
        stream_seed(scenario.master_seed,
                    static_cast<std::uint64_t>(replication_index),
                    static_cast<std::uint64_t>(a)));
  const std::vector<double> gaps = scenario.gaps();
  if (regret_out != nullptr)
    regret_out->assign(scenario.checkpoints.size(), 0.0);
  if (actions_out != nullptr) {
    actions_out->clear();
    actions_out->reserve(static_cast<std::size_t>(scenario.horizon));
  }
  double regret = 0.0;
  std::size_t next_checkpoint = 0;
  for (std::int64_t round = 1; round <= scenario.horizon; ++round) {
    const int arm = state.select_arm();
    const double reward =
        scenario.arms[static_cast<std::size_t>(arm)].sample(
            streams[static_cast<std::size_t>(arm)]);
    state.update(arm, reward);
    regret += gaps[static_cast<std::size_t>(arm)];
    if (actions_out != nullptr) actions_out->push_back(arm);
    if (regret_out != nullptr &&
        next_checkpoint < scenario.checkpoints.size() &&
        scenario.checkpoints[next_checkpoint] == round)
      (*regret_out)[next_checkpoint++] = regret;
  }
}

}  // namespace

std::vector<double> run_single(const PolicySpec& spec, const Scenario& scenario,
                               int replication_index) {
  std::vector<double> regret;
  play_one(spec, scenario, replication_index, &regret, nullptr);
  return regret;
}

std::vector<int> action_sequence(const PolicySpec& spec,
                                 const Scenario& scenario,
                                 int replication_index) {
  std::vector<int> actions;
  play_one(spec, scenario, replication_index, nullptr, &actions);
  return actions;
}

std::vector<std::vector<double>> run_replications(const PolicySpec& spec,
                                                  const Scenario& scenario,
                                                  int num_threads) {
  scenario.validate();
  std::vector<std::vector<double>> rows(
      static_cast<std::size_t>(scenario.replications));
  parallel_for(scenario.replications, num_threads, [&](int r) {
    rows[static_cast<std::size_t>(r)] = run_single(spec, scenario, r);
  });
  return rows;
}

namespace {

// Nearest-rank index for the quantile q = per_myriad / 10000 on n samples:
// ceil(q * n) computed exactly in integers, clamped to [1, n], minus 1.
std::size_t nearest_rank_index(std::int64_t per_myriad, std::size_t n) {
  std::int64_t rank =
      (per_myriad * static_cast<std::int64_t>(n) + 9999) / 10000;
  rank = std::clamp<std::int64_t>(rank, 1, static_cast<std::int64_t>(n));
  return static_cast<std::size_t>(rank - 1);
}

}  // namespace

RegretSummary run_monte_carlo(const PolicySpec& spec, const Scenario& scenario,
                              int num_threads) {
  const auto rows = run_replications(spec, scenario, num_threads);
  const std::size_t num_checkpoints = scenario.checkpoints.size();
  const std::size_t n = rows.size();
  RegretSummary summary;
  summary.checkpoints = scenario.checkpoints;
  summary.mean_regret.resize(num_checkpoints);
  summary.q0005.resize(num_checkpoints);
  summary.q0995.resize(num_checkpoints);
  summary.q09995.resize(num_checkpoints);
  std::vector<double> column(n);
  for (std::size_t c = 0; c < num_checkpoints; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      column[r] = rows[r][c];
      sum += column[r];
    }
    summary.mean_regret[c] = sum / static_cast<double>(n);
    std::sort(column.begin(), column.end());
    summary.q0005[c] = column[nearest_rank_index(50, n)];
    summary.q0995[c] = column[nearest_rank_index(9950, n)];
    summary.q09995[c] = column[nearest_rank_index(9995, n)];
  }
  return summary;
}

}  // namespace klucb
