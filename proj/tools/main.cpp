#include <iostream>
#include <string>
#include <vector>

#include "pcconj/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pcconj::cli::run(args, std::cout, std::cerr);
}
