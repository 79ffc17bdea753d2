#include "rambin/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rambin::cli_main(argc, argv, std::cout, std::cerr); }
