#include <iostream>

#include "bialg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bialg::run_cli(args, std::cout, std::cerr);
}
