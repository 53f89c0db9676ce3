#include <iostream>

#include "whitforge/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return whitforge::cli::run(args, std::cin, std::cout, std::cerr);
}
