#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace mescorr::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 2,   ///< bad flags, domain or truncation errors
    kSolverError = 3,
    kOracleGap = 4,
};

/// Runs one subcommand (`spectrum`, `fidelity`, `fig1`, `fig2`, `bell-oracle`,
/// `kerr`). `args` excludes the program name. CSV goes to `out` unless `--out`
/// names a file; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace mescorr::cli
