#include <iostream>
#include <string>
#include <vector>

#include "proxim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return proxim::cli::run(args, std::cout, std::cerr);
}
