#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclemod::cli {

// Exit codes shared by every verb.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRejected = 3;

inline constexpr const char* kThresholdEnv = "CYCLEMOD_THRESHOLD";

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclemod::cli
