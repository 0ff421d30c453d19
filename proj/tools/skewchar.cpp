#include <iostream>
#include <string>
#include <vector>

#include "skewchar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skewchar::run(args, std::cout, std::cerr);
}
