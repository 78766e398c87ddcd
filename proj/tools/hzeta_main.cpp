#include <iostream>
#include <string>
#include <vector>

#include "hzeta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hzeta::run(args, std::cout, std::cerr);
}
