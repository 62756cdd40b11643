#include <iostream>

#include "rankcrank/cli.hpp"

int main(int argc, char** argv) {
  return rankcrank::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
