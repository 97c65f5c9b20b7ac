#pragma once

// Command-line front end: solve, verify, params, generate and classify.
//
// Exit codes: 0 match / pass / complete, 1 no match / fail / incomplete,
// 2 usage or I/O error, 3 resource limit, 4 algorithm not applicable.

#include <iosfwd>
#include <string>
#include <vector>

namespace gfm::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kResourceLimit = 3,
  kNotApplicable = 4,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfm::cli
