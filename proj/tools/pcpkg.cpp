#include <iostream>
#include <string>
#include <vector>

#include "pcpkg/cli/App.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pcpkg::cli::run(args, std::cout, std::cerr);
}
