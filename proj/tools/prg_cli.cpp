#include <iostream>

#include "prg/cli.hpp"

int main(int argc, char** argv) { return prg::run_cli(argc, argv, std::cout, std::cerr); }
