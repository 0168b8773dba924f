#include <iostream>

#include "wedgedeg/cli.hpp"

int main(int argc, char** argv) {
  return wedgedeg::run_cli(argc, argv, std::cout, std::cerr);
}
