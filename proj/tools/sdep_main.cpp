#include <iostream>

#include "sdep/cli.hpp"

int main(int argc, char** argv) {
  return sdep::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
