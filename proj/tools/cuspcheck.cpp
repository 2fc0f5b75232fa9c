#include <iostream>
#include <string>
#include <vector>

#include "cuspcheck/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cuspcheck::cli::run(args, std::cin, std::cout, std::cerr);
}
