#include <iostream>
#include <string>
#include <vector>

#include "rys/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rys::run_command(args, std::cout, std::cerr);
}
