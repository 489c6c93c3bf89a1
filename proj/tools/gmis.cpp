#include <iostream>
#include <string>
#include <vector>

#include "gmis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gmis::run_cli(args, std::cout, std::cerr);
}
