#include <iostream>

#include "monlab/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return monlab::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
