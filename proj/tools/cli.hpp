#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsinf::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kNotEquivalent = 2,
  kNotRealizable = 3,
  kDisagree = 4,
};

/// Runs one invocation. argv[0] is the program name. Results go to `out`
/// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsinf::cli
