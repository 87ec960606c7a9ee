#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace tamegen::testing {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

/// Runs the CLI with `args` and captures stdout.
inline CommandResult run_cli(const std::string& args) {
  std::string command = std::string(TAMEGEN_CLI_PATH) + " " + args + " 2>/dev/null";
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.output.append(buffer.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace tamegen::testing
