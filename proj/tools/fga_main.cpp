#include <iostream>

#include "fga/cli.hpp"

int main(int argc, char** argv) { return fga::run_cli(argc, argv, std::cout, std::cerr); }
