#include <iostream>
#include <string>
#include <vector>

#include "gva/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gva::cli_main(args, std::cout, std::cerr);
}
