#include <iostream>

#include "acx4/cli.hpp"

int main(int argc, char** argv) { return acx4::cli_main(argc, argv, std::cout, std::cerr); }
