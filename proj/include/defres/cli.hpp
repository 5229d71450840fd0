#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace defres::cli {

/// Exit statuses.
enum Exit : int {
  kOk = 0,
  kPrecondition = 1,
  kParse = 2,
  kBudget = 3,
  kVerifyFailed = 4,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace defres::cli
