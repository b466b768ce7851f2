#include <iostream>

#include "catwords/cli.hpp"

int main(int argc, char** argv) { return catwords::cli::run(argc, argv, std::cout, std::cerr); }
