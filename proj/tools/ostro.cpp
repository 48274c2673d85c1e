#include <iostream>
#include <string>
#include <vector>

#include "ostro/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ostro::cli::main_entry(args, std::cout, std::cerr);
}
