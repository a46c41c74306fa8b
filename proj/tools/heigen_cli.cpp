#include <iostream>

#include "heigen/cli.hpp"

int main(int argc, char** argv) { return heigen::cli_main(argc, argv, std::cout, std::cerr); }
