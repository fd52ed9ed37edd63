#include <iostream>

#include "univoque/cli.hpp"

int main(int argc, char** argv) {
  return univoque::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
