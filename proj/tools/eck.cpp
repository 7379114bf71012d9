#include <iostream>

#include "eck/cli.hpp"

int main(int argc, char** argv) { return eck::cli::run(argc, argv, std::cout, std::cerr); }
