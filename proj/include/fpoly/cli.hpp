#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kSchema = "fpoly.v1";

/// Runs one `fpoly` invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 a failed claim or verification, 2 usage,
/// file-format or cap errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpoly::cli
