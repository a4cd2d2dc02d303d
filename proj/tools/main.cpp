#include "nraprove/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return nraprove::run_cli(argc, argv, std::cout, std::cerr); }
