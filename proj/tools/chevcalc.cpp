#include <iostream>

#include "chev/cli.hpp"

int main(int argc, char** argv) { return chev::run_cli(argc, argv, std::cout, std::cerr); }
