#include <iostream>
#include <vector>

#include "superrep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return srep::run_command(args, std::cout, std::cerr);
}
