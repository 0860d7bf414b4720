#pragma once

// Minimal popen wrapper for driving the CLI binary from tests. The binary
// path comes from the TELEWIT_BIN environment variable (set by ctest) or
// from an explicit argument.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace subprocess {

struct Result {
  int exit_code;
  std::string output;  // stdout, plus stderr when merged
};

inline Result run(const std::string& command, bool merge_stderr = false) {
  FILE* pipe =
      popen((command + (merge_stderr ? " 2>&1" : " 2>/dev/null")).c_str(), "r");
  if (pipe == nullptr) {
    return {-1, ""};
  }
  std::string output;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

inline const char* cli_path() { return std::getenv("TELEWIT_BIN"); }

}  // namespace subprocess
