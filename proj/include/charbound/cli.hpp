#pragma once

#include <iosfwd>

namespace charbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Subcommands table1 | verify | scan | membership | compare.
/// Returns 0 on success, 1 when a check fails, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charbound::cli
