#include <iostream>
#include <string>
#include <vector>

#include "rackoh/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rackoh::cli::run(args, std::cout, std::cerr);
}
