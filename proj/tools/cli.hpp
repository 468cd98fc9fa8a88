#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gwcount::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kCacheCorrupt = 3,
    kResourceGuard = 4,
    kMathPrecondition = 5,
};

inline constexpr int kDefaultMaxDegree = 200;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwcount::cli
