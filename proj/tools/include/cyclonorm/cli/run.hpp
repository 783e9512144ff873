#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace cyclonorm::cli {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

/// Executes one command line (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when a
/// verification came out false, 2 on malformed input or a violated
/// precondition.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cyclonorm::cli
