#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mzv::cli {

enum ExitCode : int { kAllPassed = 0, kMismatch = 1, kUsageError = 2 };

struct Range {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
};

/// "lo..hi" (inclusive) or a single value. Throws std::invalid_argument.
Range parse_range(const std::string& text);

/// "10,100,1000". Throws std::invalid_argument.
std::vector<std::uint32_t> parse_schedule(const std::string& text);

/// Worker count from MZV_THREADS (>= 1), else the hardware concurrency.
unsigned thread_budget();

/// Entry point shared by the executable and the tests. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzv::cli
