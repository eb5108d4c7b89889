#include <iostream>

#include "samf/cli.hpp"

int main(int argc, char** argv) {
  return samf::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
