#include "klucb/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "klucb/format.hpp"

namespace klucb {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
    --end;
  return s.substr(begin, end - begin);
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> words;
  std::istringstream in(s);
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

[[noreturn]] void fail(const std::string& message) {
  throw ConfigError(message);
}

[[noreturn]] void fail_at(int line, const std::string& message) {
  fail("line " + std::to_string(line) + ": " + message);
}

double parse_double(const std::string& token, const std::string& what) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end || !std::isfinite(value))
    fail(what + ": expected a finite number, got '" + token + "'");
  return value;
}

std::int64_t parse_int(const std::string& token, const std::string& what) {
  std::int64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end)
    fail(what + ": expected an integer, got '" + token + "'");
  return value;
}

std::uint64_t parse_uint(const std::string& token, const std::string& what) {
  std::uint64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end)
    fail(what + ": expected a nonnegative integer, got '" + token + "'");
  return value;
}

}  // namespace

std::vector<ConfigEntry> read_config_text(const std::string& text) {
  std::vector<ConfigEntry> entries;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      fail_at(line, "expected 'key = value', got '" + stripped + "'");
    ConfigEntry entry;
    entry.key = trim(stripped.substr(0, eq));
    entry.value = trim(stripped.substr(eq + 1));
    entry.line = line;
    if (entry.key.empty()) fail_at(line, "empty key");
    if (entry.value.empty()) fail_at(line, "empty value for '" + entry.key + "'");
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ConfigEntry> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return read_config_text(buffer.str());
  } catch (const ConfigError& e) {
    fail(path + ": " + e.what());
  }
}

Divergence parse_divergence(const std::string& token) {
  std::string name = token;
  std::optional<double> param;
  const std::size_t colon = token.find(':');
  if (colon != std::string::npos) {
    name = token.substr(0, colon);
    param = parse_double(token.substr(colon + 1),
                         "divergence parameter of '" + name + "'");
  }
  const bool has_param = param.has_value();
  auto need_param = [&](const char* what) {
    if (!has_param)
      fail("divergence '" + name + "' needs a parameter (" +
           std::string(what) + "), e.g. '" + name + ":1'");
    return *param;
  };
  auto no_param = [&] {
    if (has_param) fail("divergence '" + name + "' takes no parameter");
  };
  if (name == "bernoulli") {
    no_param();
    return Divergence::bernoulli();
  }
  if (name == "poisson") {
    no_param();
    return Divergence::poisson();
  }
  if (name == "binomial") return Divergence::binomial(need_param("trials"));
  if (name == "negbinomial")
    return Divergence::neg_binomial(need_param("failures"));
  if (name == "gaussian") return Divergence::gaussian(need_param("variance"));
  if (name == "gamma") return Divergence::gamma(need_param("shape"));
  if (name == "quadratic") return Divergence::quadratic(need_param("scale"));
  fail("unknown divergence '" + name + "'");
}

ExplorationSchedule parse_schedule(const std::string& token) {
  if (token == "logt") return ExplorationSchedule::log_t();
  if (token == "log3loglog") return ExplorationSchedule::log_plus_3loglog();
  if (token == "logloglog") return ExplorationSchedule::log_plus_loglog();
  fail("unknown schedule '" + token +
       "' (expected logt, log3loglog or logloglog)");
}

ArmModel parse_arm(const std::string& text) {
  const std::vector<std::string> words = split_words(text);
  if (words.empty()) fail("empty arm description");
  const std::string& kind = words[0];
  auto arity = [&](std::size_t n) {
    if (words.size() != n + 1)
      fail("arm '" + kind + "' takes " + std::to_string(n) +
           " parameter(s), got '" + text + "'");
  };
  try {
    if (kind == "bernoulli") {
      arity(1);
      return ArmModel::bernoulli(parse_double(words[1], "bernoulli p"));
    }
    if (kind == "tpoisson") {
      arity(2);
      return ArmModel::truncated_poisson(
          parse_double(words[1], "tpoisson lambda"),
          parse_double(words[2], "tpoisson cap"));
    }
    if (kind == "texponential") {
      arity(2);
      return ArmModel::truncated_exponential(
          parse_double(words[1], "texponential rate"),
          parse_double(words[2], "texponential cap"));
    }
    if (kind == "gaussian") {
      arity(2);
      return ArmModel::gaussian(parse_double(words[1], "gaussian mu"),
                                parse_double(words[2], "gaussian sigma2"));
    }
    if (kind == "finite") {
      arity(1);
      std::vector<double> values;
      std::vector<double> probs;
      std::istringstream in(words[1]);
      std::string pair;
      while (std::getline(in, pair, ',')) {
        const std::size_t colon = pair.find(':');
        if (colon == std::string::npos)
          fail("finite arm: expected 'value:prob', got '" + pair + "'");
        const double v = parse_double(pair.substr(0, colon), "finite value");
        if (v < 0.0) fail("finite arm: values must be >= 0");
        values.push_back(v);
        probs.push_back(parse_double(pair.substr(colon + 1), "finite prob"));
      }
      return ArmModel::finite_support(std::move(values), std::move(probs));
    }
  } catch (const std::domain_error& e) {
    fail("arm '" + text + "': " + e.what());
  }
  fail("unknown arm kind '" + kind + "'");
}

PolicySpec parse_policy(const std::string& text) {
  const std::vector<std::string> words = split_words(text);
  if (words.empty()) fail("empty policy description");
  const std::string& kind = words[0];
  auto arity = [&](std::size_t n) {
    if (words.size() != n + 1)
      fail("policy '" + kind + "' takes " + std::to_string(n) +
           " parameter(s), got '" + text + "'");
  };
  try {
    if (kind == "klucb") {
      arity(2);
      return PolicySpec::klucb(parse_divergence(words[1]),
                               parse_schedule(words[2]));
    }
    if (kind == "empklucb") {
      arity(1);
      return PolicySpec::empirical_klucb(parse_schedule(words[1]));
    }
    if (kind == "ucb") {
      arity(0);
      return PolicySpec::ucb();
    }
    if (kind == "ucb-cor2") {
      arity(0);
      return PolicySpec::ucb_cor2();
    }
    if (kind == "ucbv") {
      arity(0);
      return PolicySpec::ucb_v();
    }
    if (kind == "ucbtuned") {
      arity(0);
      return PolicySpec::ucb_tuned();
    }
  } catch (const std::domain_error& e) {
    fail("policy '" + text + "': " + e.what());
  }
  fail("unknown policy kind '" + kind + "'");
}

namespace {

// Grammar text of one arm, inverse of parse_arm.
std::string arm_text(const ArmModel& arm) {
  switch (arm.kind()) {
    case ArmModel::Kind::kBernoulli:
      return "bernoulli " + format_double(arm.param_a());
    case ArmModel::Kind::kTruncatedPoisson:
      return "tpoisson " + format_double(arm.param_a()) + " " +
             format_double(arm.param_b());
    case ArmModel::Kind::kTruncatedExponential:
      return "texponential " + format_double(arm.param_a()) + " " +
             format_double(arm.param_b());
    case ArmModel::Kind::kGaussian:
      return "gaussian " + format_double(arm.param_a()) + " " +
             format_double(arm.param_b());
    case ArmModel::Kind::kFiniteSupport: {
      std::string out = "finite ";
      for (std::size_t i = 0; i < arm.values().size(); ++i) {
        if (i > 0) out += ',';
        out += format_double(arm.values()[i]) + ":" +
               format_double(arm.probs()[i]);
      }
      return out;
    }
  }
  return "";
}

// Grammar text of one policy, inverse of parse_policy.
std::string policy_text(const PolicySpec& spec) {
  switch (spec.kind) {
    case PolicyKind::kKlUcb:
      return "klucb " + spec.divergence->name() + " " + spec.schedule.name();
    case PolicyKind::kEmpiricalKlUcb:
      return "empklucb " + spec.schedule.name();
    default:
      return spec.name();
  }
}

}  // namespace

ScenarioConfig interpret_scenario(const std::vector<ConfigEntry>& entries) {
  ScenarioConfig config;
  Scenario& scenario = config.scenario;
  std::unordered_map<std::string, int> seen_scalar;
  bool have_horizon = false;
  bool have_rescale = false;
  for (const auto& entry : entries) {
    auto scalar_once = [&] {
      const auto [it, inserted] = seen_scalar.emplace(entry.key, entry.line);
      if (!inserted)
        fail_at(entry.line, "duplicate key '" + entry.key +
                                "' (first set on line " +
                                std::to_string(it->second) + ")");
    };
    try {
      if (entry.key == "horizon") {
        scalar_once();
        scenario.horizon = parse_int(entry.value, "horizon");
        have_horizon = true;
      } else if (entry.key == "replications") {
        scalar_once();
        const std::int64_t n = parse_int(entry.value, "replications");
        if (n < 1 || n > std::numeric_limits<int>::max())
          fail("replications out of range");
        scenario.replications = static_cast<int>(n);
      } else if (entry.key == "seed") {
        scalar_once();
        scenario.master_seed = parse_uint(entry.value, "seed");
      } else if (entry.key == "rescale_bound") {
        scalar_once();
        scenario.rescale_bound = parse_double(entry.value, "rescale_bound");
        if (scenario.rescale_bound <= 0.0)
          fail("rescale_bound must be positive");
        have_rescale = true;
      } else if (entry.key == "arm") {
        scenario.arms.push_back(parse_arm(entry.value));
      } else if (entry.key == "policy") {
        config.policies.push_back(parse_policy(entry.value));
      } else {
        fail("unknown key '" + entry.key + "'");
      }
    } catch (const ConfigError& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      fail_at(entry.line, what);
    }
  }
  if (!have_horizon) fail("missing key 'horizon'");
  if (scenario.horizon < 1) fail("horizon must be >= 1");
  if (scenario.arms.empty()) fail("no arms");
  if (config.policies.empty()) fail("no policies");
  if (!have_rescale) {
    double bound = 0.0;
    for (const auto& arm : scenario.arms)
      bound = std::max(bound, arm.max_value());
    if (!std::isfinite(bound))
      fail("rescale_bound is required when an arm is unbounded");
    scenario.rescale_bound = bound;
  }
  std::unordered_set<std::string> names;
  for (const auto& policy : config.policies)
    if (!names.insert(policy.name()).second)
      fail("duplicate policy '" + policy.name() + "'");
  scenario.master_seed = seen_scalar.count("seed") ? scenario.master_seed : 1;
  scenario.checkpoints = default_checkpoints(scenario.horizon);
  return config;
}

std::string canonical_text(const ScenarioConfig& config) {
  std::string out;
  out += "horizon = " + std::to_string(config.scenario.horizon) + "\n";
  out += "replications = " + std::to_string(config.scenario.replications) +
         "\n";
  out += "seed = " + std::to_string(config.scenario.master_seed) + "\n";
  out += "rescale_bound = " + format_double(config.scenario.rescale_bound) +
         "\n";
  for (const auto& arm : config.scenario.arms)
    out += "arm = " + arm_text(arm) + "\n";
  for (const auto& policy : config.policies)
    out += "policy = " + policy_text(policy) + "\n";
  return out;
}

std::uint64_t config_hash(const ScenarioConfig& config) {
  const std::string text = canonical_text(config);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

CheckConfig interpret_check(const std::vector<ConfigEntry>& entries) {
  // The kind gates which keys are allowed, so read it first.
  std::optional<CheckConfig::Kind> kind;
  for (const auto& entry : entries) {
    if (entry.key != "check") continue;
    if (kind.has_value()) fail_at(entry.line, "duplicate key 'check'");
    if (entry.value == "deviation") {
      kind = CheckConfig::Kind::kDeviation;
    } else if (entry.value == "coverage") {
      kind = CheckConfig::Kind::kCoverage;
    } else {
      fail_at(entry.line, "check must be 'deviation' or 'coverage'");
    }
  }
  if (!kind.has_value()) fail("missing key 'check'");
  CheckConfig config;
  config.kind = *kind;
  const bool deviation = config.kind == CheckConfig::Kind::kDeviation;
  std::unordered_map<std::string, int> seen;
  for (const auto& entry : entries) {
    if (entry.key != "check") {
      const auto [it, inserted] = seen.emplace(entry.key, entry.line);
      if (!inserted)
        fail_at(entry.line, "duplicate key '" + entry.key +
                                "' (first set on line " +
                                std::to_string(it->second) + ")");
    }
    try {
      if (entry.key == "check") {
        continue;
      } else if (entry.key == "epsilon") {
        config.epsilon = parse_double(entry.value, "epsilon");
      } else if (entry.key == "samples") {
        config.samples = parse_int(entry.value, "samples");
      } else if (entry.key == "seed") {
        config.seed = parse_uint(entry.value, "seed");
      } else if (deviation && entry.key == "divergence") {
        config.divergence = parse_divergence(entry.value);
      } else if (deviation && entry.key == "mu_star") {
        config.mu_star = parse_double(entry.value, "mu_star");
      } else if (deviation && entry.key == "t") {
        config.t = parse_int(entry.value, "t");
      } else if (!deviation && entry.key == "arm") {
        config.arm = parse_arm(entry.value);
      } else if (!deviation && entry.key == "n") {
        const std::int64_t n = parse_int(entry.value, "n");
        if (n < 1 || n > std::numeric_limits<int>::max())
          fail("n out of range");
        config.n = static_cast<int>(n);
      } else {
        fail("key '" + entry.key + "' is not valid for check = " +
             (deviation ? "deviation" : "coverage"));
      }
    } catch (const ConfigError& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      fail_at(entry.line, what);
    }
  }
  auto missing = [&](const char* key) { fail(std::string("missing key '") + key + "'"); };
  if (!seen.count("epsilon")) missing("epsilon");
  if (!seen.count("samples")) missing("samples");
  if (config.samples < 1) fail("samples must be >= 1");
  if (deviation) {
    if (!config.divergence.has_value()) missing("divergence");
    if (!seen.count("mu_star")) missing("mu_star");
    if (!seen.count("t")) missing("t");
  } else {
    if (!config.arm.has_value()) missing("arm");
    if (!seen.count("n")) missing("n");
  }
  return config;
}

}  // namespace klucb
