#include <iostream>
#include <string>
#include <vector>

#include "compdnf/cli.hpp"

int main(int argc, char** argv) {
  return compdnf::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
