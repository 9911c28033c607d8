#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace minisphere::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kEmpty = 3 };

/// Entry point for the `minisphere` tool: solve | gen | bench.
/// Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "1e4,3e4,100000" -> counts. Throws Error(InvalidParams).
std::vector<std::size_t> parse_sizes(std::string_view text);

/// "1,2,3" or "1..20" (inclusive) or a mix. Throws Error(InvalidParams).
std::vector<std::uint64_t> parse_seeds(std::string_view text);

}  // namespace minisphere::cli
