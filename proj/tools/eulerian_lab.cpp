#include <iostream>
#include <string>
#include <vector>

#include "eulerian/toolkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eulerian::toolkit::cli_main(args, std::cout, std::cerr);
}
