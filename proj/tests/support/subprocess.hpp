#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace factorkit::testing {

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Runs `command` through the shell, capturing stdout, stderr, and the exit
// code. Good enough for driving the cli binary in tests.
inline CommandResult run_command(const std::string& command) {
  static int counter = 0;
  const std::filesystem::path err_path =
      std::filesystem::temp_directory_path() /
      ("factorkit_test_stderr_" + std::to_string(::getpid()) + "_" +
       std::to_string(counter++) + ".txt");

  CommandResult result;
  const std::string full = command + " 2>" + err_path.string();
  FILE* pipe = ::popen(full.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  std::array<char, 4096> chunk;
  std::size_t got = 0;
  while ((got = ::fread(chunk.data(), 1, chunk.size(), pipe)) > 0) {
    result.out.append(chunk.data(), got);
  }
  const int status = ::pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  result.err = read_file(err_path);
  std::filesystem::remove(err_path);
  return result;
}

}  // namespace factorkit::testing
