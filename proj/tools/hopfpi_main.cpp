#include <iostream>
#include <vector>

#include "hopfpi/cli.hpp"

int main(int argc, char** argv) {
  return hopfpi::run_cli(std::vector<std::string>(argv + 1, argv + argc),
                         std::cout, std::cerr);
}
