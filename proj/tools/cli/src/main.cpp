#include <iostream>

#include "circlehilb/cli/commands.hpp"

int main(int argc, char** argv) { return circlehilb::cli::run(argc, argv, std::cout, std::cerr); }
