#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mtp {

/// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // proof failure, rejected certificate
inline constexpr int kExitUsage = 2;   // bad flags, unreadable or malformed input

/// Runs `mtp <subcommand> ...`; args excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtp
