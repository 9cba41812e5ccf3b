#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "coordlat/types.hpp"

namespace coordlat::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
};

/// Runs one invocation (argv without the program name). Output goes to
/// `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

/// The built-in verification corpus: one entry per acceptance criterion.
std::vector<CriterionResult> run_default_corpus(const Limits& limits = {});

}  // namespace coordlat::cli
