#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kls::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kPreconditionFailure = 2;
inline constexpr int kInternalError = 3;

/// Runs the command line (without the program name). Results go to `out`
/// unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kls::cli
