#include <iostream>

#include "defres/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return defres::cli::run(args, std::cout, std::cerr);
}
