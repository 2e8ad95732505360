#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alexandroff::cli {

// Exit codes.
inline constexpr int kOk = 0;           // success, Spatial, PASS
inline constexpr int kNegative = 1;     // NotSpatial, FAIL, no embedding
inline constexpr int kParse = 2;        // malformed input, unknown family, bad usage
inline constexpr int kRelation = 3;     // inconsistent relation or oracle
inline constexpr int kGuard = 4;        // a size guard was hit
inline constexpr int kUnknown = 5;      // undecided within budget
inline constexpr int kInternal = 6;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alexandroff::cli
