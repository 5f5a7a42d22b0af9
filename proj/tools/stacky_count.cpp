#include <iostream>

#include "stacky/cli.hpp"

int main(int argc, char** argv) { return stacky::cli::run(argc, argv, std::cout, std::cerr); }
