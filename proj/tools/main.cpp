#include <iostream>

#include "hopfdouble/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopfdouble::run(args, std::cout, std::cerr);
}
