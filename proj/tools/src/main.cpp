#include <iostream>

#include "jetgeo_cli/cli.hpp"

int main(int argc, char** argv) {
  return jetgeo::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
