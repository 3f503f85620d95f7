#include <iostream>

#include "tilezeta/cli.hpp"

int main(int argc, char** argv) { return tilezeta::cli_main(argc, argv, std::cout, std::cerr); }
