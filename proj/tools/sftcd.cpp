#include <iostream>

#include "sftcd/cli.hpp"

int main(int argc, char** argv) { return sftcd::run_cli(argc, argv, std::cout, std::cerr); }
