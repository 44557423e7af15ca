#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supercode::cli {

// Exit codes: 0 ok, 1 a decode found errors, 2 usage or validation failure.
inline constexpr int kOk = 0;
inline constexpr int kDetected = 1;
inline constexpr int kInvalid = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace supercode::cli
