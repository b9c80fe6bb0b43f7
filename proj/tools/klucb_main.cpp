#include <cstdlib>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "klucb/commands.hpp"

namespace {

// Thread-count resolution: --threads flag, then the KLUCB_THREADS
// environment variable, then the hardware concurrency.
int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("KLUCB_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0)
      return static_cast<int>(value);
  }
  const unsigned hardware = std::thread::hardware_concurrency();
  return hardware > 0 ? static_cast<int>(hardware) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Multi-armed bandit simulator built around divergence-based "
      "upper-confidence index policies"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  bool paper_scale = false;
  int threads = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "scenario config file")
        ->required();
    cmd->add_option("--out", out_path,
                    "output CSV path (default: standard output)");
    cmd->add_option("--threads", threads,
                    "worker threads (default: KLUCB_THREADS env var, then "
                    "the hardware concurrency)");
  };

  CLI::App* run = app.add_subcommand(
      "run", "simulate the configured policies and emit regret curves");
  add_common(run);
  run->add_flag("--paper-scale", paper_scale,
                "multiply the replication count by 50");

  CLI::App* bounds = app.add_subcommand(
      "bounds", "evaluate the finite-time bounds for the configured "
                "policies and arms");
  add_common(bounds);

  CLI::App* check = app.add_subcommand(
      "check", "Monte-Carlo verification of a deviation or coverage bound");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is a configuration error
  }

  klucb::CommandOptions options;
  options.config_path = config_path;
  options.out_path = out_path;
  options.paper_scale = paper_scale;
  options.threads = resolve_threads(threads);

  if (run->parsed()) return klucb::cmd_run(options);
  if (bounds->parsed()) return klucb::cmd_bounds(options);
  return klucb::cmd_check(options);
}
