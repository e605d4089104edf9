#include <iostream>

#include "cocon/cli.hpp"

int main(int argc, char** argv) { return cocon::run_cli(argc, argv, std::cout, std::cerr); }
