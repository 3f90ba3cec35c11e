#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locgenus::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kParseFailure = 2;
inline constexpr int kDomainFailure = 3;
inline constexpr int kResourceGuard = 4;

/// Runs one command line (without the program name). Results go to `out`,
/// failures to `err` as a single `error: ...` line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locgenus::cli
