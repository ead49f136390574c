#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecr::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kNetworkFailure = 3;

/// Runs one ec-riordan invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ecr::cli
