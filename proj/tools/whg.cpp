#include <iostream>
#include <string>
#include <vector>

#include "whg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return whg::cli::run(args, std::cout, std::cerr);
}
