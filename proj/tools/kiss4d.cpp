#include <iostream>
#include <string>
#include <vector>

#include "kiss4d/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kiss4d::run_cli(args, std::cin, std::cout, std::cerr);
}
