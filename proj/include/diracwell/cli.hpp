#pragma once

#include <iosfwd>

namespace diracwell {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitConfig = 2,
  kExitDomain = 3,
  kExitValidation = 4,
};

/// `diracwell <mode> [options]`. CSV goes to --out, or to `out` when no path is given;
/// diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diracwell
