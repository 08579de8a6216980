#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace plenoptic::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Runs the command line tool. args excludes the program name.
/// Returns 0 on success, 1 on computation errors, 2 on argument errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace plenoptic::cli
