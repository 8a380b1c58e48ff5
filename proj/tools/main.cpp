#include <iostream>
#include <string>
#include <vector>

#include "rootbalance/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rootbalance::run(args, std::cout, std::cerr);
}
