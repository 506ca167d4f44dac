#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace census {

inline constexpr const char* kEngineVersion = "0.1.0";

// Exit codes: 0 success / found, 1 negative detection / verification
// mismatch at user level, 2 usage or input error, 3 internal inconsistency.
struct CliStreams {
  std::istream* in;
  std::ostream* out;
  std::ostream* err;
};

int run_cli(const std::vector<std::string>& args, CliStreams io);

}  // namespace census
