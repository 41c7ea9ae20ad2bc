#include <iostream>

#include "parorb/cli.hpp"

int main(int argc, char** argv) {
  return parorb::cli::run(argc, argv, std::cout, std::cerr);
}
