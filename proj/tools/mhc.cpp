#include <iostream>
#include <string>
#include <vector>

#include "mhc/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = mhc::cli::run_command(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.code;
}
