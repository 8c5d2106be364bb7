#include <iostream>

#include "cnlt/cli.hpp"

int main(int argc, char** argv) {
  return cnlt::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
