#include <iostream>

#include "grotzsch/cli.hpp"

int main(int argc, char** argv) {
  return grotzsch::run_cli(argc, argv, std::cout, std::cerr);
}
