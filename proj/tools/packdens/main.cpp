#include <iostream>
#include <string>
#include <vector>

#include "packdens/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return packdens::cli::run(args, std::cout, std::cerr);
}
