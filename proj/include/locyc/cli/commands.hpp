#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace locyc::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 2, exit_domain = 3, exit_partial = 4 };

/// Bad flags or values; maps to exit_usage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs one subcommand (`args` excludes the program name). The report goes to
/// `out`, diagnostics and progress to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locyc::cli
