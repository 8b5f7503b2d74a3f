#include "sl3/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sl3::run_cli(argc, argv, std::cout, std::cerr); }
