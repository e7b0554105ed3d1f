#include <iostream>

#include "h1kernel/cli.hpp"

int main(int argc, char** argv) {
  return h1kernel::run_cli(argc, argv, std::cout, std::cerr);
}
