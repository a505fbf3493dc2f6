#include <iostream>
#include <string>
#include <vector>

#include "liouville/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const liouville::CommandOutcome outcome = liouville::run(args);
  (outcome.exit_code == 2 ? std::cerr : std::cout) << outcome.report;
  return outcome.exit_code;
}
