#pragma once

#include <string>

namespace klucb {

// Shared options of the CLI subcommands.
struct CommandOptions {
  std::string config_path;
  std::string out_path;      // empty: write to stdout
  bool paper_scale = false;  // multiply the replication count by 50
  int threads = 1;
};

// Each command returns a process exit status: 0 on success, 2 when the
// configuration is invalid, 3 on a runtime failure. Diagnostics go to
// stderr.
int cmd_run(const CommandOptions& options);
int cmd_bounds(const CommandOptions& options);
int cmd_check(const CommandOptions& options);

}  // namespace klucb
