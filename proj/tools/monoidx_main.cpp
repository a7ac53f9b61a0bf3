#include <iostream>
#include <string>
#include <vector>

#include "monoidx/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return monoidx::cli::run(args, std::cout, std::cerr);
}
