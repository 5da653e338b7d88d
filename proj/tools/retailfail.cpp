#include <iostream>
#include <string>
#include <vector>

#include "retailfail/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return retailfail::run_command(args, std::cout, std::cerr);
}
