#include <iostream>

#include "trinomia/cli.hpp"

int main(int argc, char** argv) {
  return trinomia::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
