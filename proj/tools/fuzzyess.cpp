#include <iostream>
#include <string>
#include <vector>

#include "fuzzyess/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fuzzyess::cli::run(args, std::cout, std::cerr);
}
