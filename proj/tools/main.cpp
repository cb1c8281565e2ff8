#include <iostream>
#include <string>
#include <vector>

#include "hypersolid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hypersolid::cli::run(args, std::cout, std::cerr);
}
