#include <iostream>

#include "leibalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return leibalg::run_cli(args, std::cout, std::cerr);
}
