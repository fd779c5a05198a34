#include <iostream>
#include <string>
#include <vector>

#include "nanoword_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nanoword::cli::run(args, std::cout, std::cerr);
}
