#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kCertificationFailed = 2;
inline constexpr int kInfeasible = 3;
inline constexpr int kInconclusive = 4;

/// Runs one command line (args excludes the program name). Summaries go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a file's bytes.
std::string file_digest(const std::string& path);

}  // namespace turan::cli
