#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace clitest {

struct Run {
  int exitCode = -1;
  std::string out;
};

/// Runs the hdepth executable with `args` (already shell-quoted), capturing stdout.
inline Run run(const std::string& args) {
  const std::string command = std::string(HDEPTH_CLI_PATH) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace clitest
