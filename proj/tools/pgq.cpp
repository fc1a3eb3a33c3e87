#include <iostream>
#include <string>
#include <vector>

#include "pgq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pgq::cli::run(args, std::cout, std::cerr);
}
