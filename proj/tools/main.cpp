#include <iostream>

#include "equiline/cli_io.hpp"

int main(int argc, char** argv) { return equiline::run_cli(argc, argv, std::cout, std::cerr); }
