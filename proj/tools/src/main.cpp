#include <iostream>

#include "ent2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ent2::cli::run(args, std::cout, std::cerr);
}
