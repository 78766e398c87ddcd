#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hzeta {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on args (program name excluded). Results go to out; errors
/// are written to err as a single JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hzeta
