#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

namespace pilab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. Reports go to `out` (or to files named by flags),
/// diagnostics to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

std::string version();

}  // namespace pilab::cli
