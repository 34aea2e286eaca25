#include <iostream>
#include <string>
#include <vector>

#include "logmonoid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return logmonoid::cli::run(args, std::cout, std::cerr);
}
