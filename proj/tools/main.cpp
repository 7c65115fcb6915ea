#include <iostream>

#include "bicoalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bicoalg::cli::run(args, std::cout, std::cerr);
}
