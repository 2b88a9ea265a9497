#include <iostream>

#include "dtwist/commands.hpp"

int main(int argc, char** argv) { return dtwist::cli_main(argc, argv, std::cout, std::cerr); }
