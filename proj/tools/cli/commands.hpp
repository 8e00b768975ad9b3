#pragma once

#include <iosfwd>

namespace ecg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // bad arguments, unreadable files, unsupported transforms
  kParse = 2,
  kCapacity = 3,
  kInfeasible = 4,
  kInternal = 5,
};

/// Runs one invocation of the tool. The report goes to `out` as a single
/// JSON object, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ecg::cli
