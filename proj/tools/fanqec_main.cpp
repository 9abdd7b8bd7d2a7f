#include <iostream>
#include <string>
#include <vector>

#include "fanqec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fanqec::run_cli(args, std::cout, std::cerr);
}
