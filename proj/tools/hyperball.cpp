#include <iostream>

#include "hyperball/cli.hpp"

int main(int argc, char** argv) { return hyperball::cli::run(argc, argv, std::cout, std::cerr); }
