#include <iostream>
#include <string>
#include <vector>

#include "semiconj/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semiconj::cli_run(args, std::cout, std::cerr);
}
