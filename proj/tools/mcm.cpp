#include "mcm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mcm::run_cli(argc, argv, std::cout, std::cerr); }
