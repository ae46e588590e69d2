#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  advlogic::cli::CommandResult r = advlogic::cli::run(args, std::cin);
  (r.exit_code == advlogic::cli::kUsage ? std::cerr : std::cout) << r.report;
  return r.exit_code;
}
