#include <iostream>

#include "sidkit/cli.hpp"

int main(int argc, char** argv) { return sidkit::cli::main(argc, argv, std::cout, std::cerr); }
