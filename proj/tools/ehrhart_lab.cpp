#include <iostream>

#include "ehrlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ehrlab::run_cli(args, std::cout, std::cerr);
}
