#include <iostream>

#include "onion/cli.hpp"

int main(int argc, char** argv) {
  return onion::runCli(argc, argv, std::cout, std::cerr);
}
