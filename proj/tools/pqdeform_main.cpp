#include <iostream>
#include <string>
#include <vector>

#include "pqdeform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pqdeform::cli::run(args, std::cout, std::cerr);
}
