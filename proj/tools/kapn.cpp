#include <iostream>

#include "kapn/cli/cli.hpp"

int main(int argc, char** argv) {
  return kapn::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
