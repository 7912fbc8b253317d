#include "polyadic/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polyadic::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
