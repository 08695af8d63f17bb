#include <iostream>

#include "diracwell/cli.hpp"

int main(int argc, char** argv) { return diracwell::run_cli(argc, argv, std::cout, std::cerr); }
