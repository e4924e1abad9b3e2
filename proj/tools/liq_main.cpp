#include <iostream>

#include "liq/cli.hpp"

int main(int argc, char** argv) {
  return liq::cli::run(argc, argv, std::cout, std::cerr);
}
