#include <iostream>

#include "akh/cli.hpp"

int main(int argc, char** argv) { return akh::cli::run(argc, argv, std::cout, std::cerr); }
