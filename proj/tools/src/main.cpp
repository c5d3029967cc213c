#include <iostream>
#include <string>
#include <vector>

#include "tmzv_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tmzv::cli::run(args, std::cout, std::cerr);
}
