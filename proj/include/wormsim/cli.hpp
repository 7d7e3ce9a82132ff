#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitAttack = 2;
inline constexpr int kExitTimeout = 3;

/// Environment variable overriding the default output directory.
inline constexpr const char* kOutputDirEnv = "WSNSIM_OUTPUT_DIR";

/// Entry point for `wsnsim`. `args` excludes the program name.
///
///   run <scenario>         one run; metrics CSV on stdout, trace written out
///   compare <scenario>     baseline vs prevention pairs over --seeds seeds
///   sweep <experiment>     batch run; runs.csv and aggregate.csv
///   fixtures               the four canonical checks on the 15-node fixture
///
/// Exit status: 0 route established / success, 2 attack detected,
/// 3 discovery timeout, 1 usage or input error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsn
