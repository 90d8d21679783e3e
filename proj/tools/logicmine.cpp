#include <iostream>
#include <string>
#include <vector>

#include "logicmine/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv, argv + argc);
  return logicmine::run_cli(args, std::cout, std::cerr);
}
