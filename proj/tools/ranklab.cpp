#include <iostream>

#include "ranklab/cli/cli.hpp"

int main(int argc, char** argv) { return ranklab::cli::run(argc, argv, std::cout, std::cerr); }
