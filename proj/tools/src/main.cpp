#include <iostream>

#include "ftatlas_cli/commands.hpp"

int main(int argc, char** argv) { return ftatlas::cli::run(argc, argv, std::cout, std::cerr); }
