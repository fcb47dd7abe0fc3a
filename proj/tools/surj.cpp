#include <iostream>
#include <string>
#include <vector>

#include "surj_cli.hpp"

int main(int argc, char** argv) {
  return surj::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
