#include <iostream>

#include "ftcbf/cli.hpp"

int main(int argc, char** argv) {
  return ftcbf::run_cli(argc, argv, std::cout, std::cerr);
}
