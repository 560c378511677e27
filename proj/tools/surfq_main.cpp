#include <iostream>
#include <string>
#include <vector>

#include "surfq/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return surfq::cli::run(args, std::cout, std::cerr);
}
