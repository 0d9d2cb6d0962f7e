#include <iostream>

#include "excalc/cli.hpp"

int main(int argc, char** argv) {
  return excalc::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
