#include <iostream>

#include "rcp/cli/run.hpp"

int main(int argc, char** argv) {
  return rcp::run_cli(argc, argv, std::cout, std::cerr);
}
