#pragma once

// Runs the CLI binary through the shell and captures its streams.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli_test {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::path(KSTRUVE_SCRATCH_DIR) / "cli_scratch";
  std::filesystem::create_directories(dir);
  return dir;
}

// `env` is prepended verbatim, e.g. "KSTRUVE_MAX_TERMS=3".
inline RunResult run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const auto dir = scratch_dir();
  const std::string tag = std::to_string(++counter);
  const auto out = dir / ("stdout_" + tag);
  const auto err = dir / ("stderr_" + tag);
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + KSTRUVE_CLI_PATH + "\" " + args + " >\"" +
                          out.string() + "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace cli_test
