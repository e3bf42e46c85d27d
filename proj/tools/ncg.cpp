#include <iostream>

#include "ncg/cli.h"

int main(int argc, char** argv) {
  return ncg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
