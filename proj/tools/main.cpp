#include <iostream>
#include <string>
#include <vector>

#include "cli_lib.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return minorforge::cli::run(args, std::cin, std::cout, std::cerr);
}
