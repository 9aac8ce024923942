#include <iostream>

#include "mcg/textio.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mcg::run_cli(args, std::cout, std::cerr);
}
