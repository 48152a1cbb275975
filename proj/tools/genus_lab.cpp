#include <iostream>
#include <string>
#include <vector>

#include "genuslab/cli.hpp"

int main(int argc, char** argv) {
  return genuslab::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
