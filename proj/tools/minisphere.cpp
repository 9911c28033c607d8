#include <iostream>

#include "minisphere/cli.hpp"

int main(int argc, char** argv) {
  return minisphere::cli::run(argc, argv, std::cout, std::cerr);
}
