#pragma once

#include <string>
#include <vector>

namespace liouville {

// 0 success, 1 verification failure, 2 usage or input error.
struct CommandOutcome {
  int exit_code = 0;
  std::string report;
};

// Runs one command. `args` excludes the program name.
CommandOutcome run(const std::vector<std::string>& args);

}  // namespace liouville
