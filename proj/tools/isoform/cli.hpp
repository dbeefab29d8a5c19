#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isoform::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. Results go to out as
/// "key = value" lines; on failure a single "error = <Name>: <detail>" line.
int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in);

}  // namespace isoform::cli
