#include <iostream>

#include "couples/cli/commands.hpp"

int main(int argc, char** argv) { return couples::cli::run(argc, argv, std::cout, std::cerr); }
