#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxdet::cli {

// Exit codes: 0 ok, 2 usage or parse error, 3 internal certificate failure,
// 4 verification mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitMismatch = 4;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxdet::cli
