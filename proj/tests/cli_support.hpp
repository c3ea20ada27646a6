#pragma once

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "test_support.hpp"

namespace testing {

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

// Runs the CLI with `args` (already shell-quoted where needed), feeding
// `input` on stdin.
inline CliRun run_cli(const std::string& args, const std::string& input = "", const std::string& env = "") {
  TempDir dir;
  spit(dir / "stdin", input);
  const auto err_path = dir / "stderr";
  const std::string cmd = env + (env.empty() ? "" : " ") + shell_quote(EVOMT_CLI) + " " + args + " < " +
                          shell_quote((dir / "stdin").string()) + " 2> " + shell_quote(err_path.string());
  CliRun run;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return run;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) run.out.append(buf, n);
  const int status = ::pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  run.err = slurp(err_path);
  return run;
}

inline std::string fixture_flags() {
  return "--lexicon " + shell_quote(data_path("lexicon.tsv").string()) + " --model " +
         shell_quote(data_path("model.ppmi").string()) + " --taglex " +
         shell_quote(data_path("taglex.tsv").string()) + " --grammar " +
         shell_quote(data_path("grammar.cfg").string());
}

}  // namespace testing
