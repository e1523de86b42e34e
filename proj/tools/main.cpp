#include <cstdlib>
#include <iostream>
#include <unistd.h>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool color = isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
  return apolar::cli::run(args, {std::cin, std::cout, std::cerr, color});
}
