#include "hgatsp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hgatsp::cli_main(argc, argv, std::cout, std::cerr); }
