#include <iostream>
#include <string>
#include <vector>

#include "ellcov/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ellcov::cli::run(args, std::cout, std::cerr);
}
