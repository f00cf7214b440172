#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyrep::cli {

enum ExitCode : int { kVerified = 0, kFailed = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  int prime = 0;
  int max_degree = 0;
  std::string table_path;
  std::string format = "text";
  bool force = false;
  long guardrail = 20000;
  int chartable_n = 0;
};

/// Parses `args` (program name excluded), runs the command and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyrep::cli
