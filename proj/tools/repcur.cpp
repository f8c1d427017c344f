#include <iostream>

#include "repcur/cli.hpp"

int main(int argc, char** argv) { return repcur::cli::main(argc, argv, std::cout, std::cerr); }
