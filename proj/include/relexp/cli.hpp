#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relexp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,      // bad arguments or a violated input invariant
  kExitTolerance = 2,  // a deviation exceeded its tolerance
};

/// Entry point shared by the executable and the tests; args exclude argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits (%.17g layout), '.' as decimal point regardless of
/// locale; reads back to the same double.
std::string format_double(double v);

}  // namespace relexp::cli
