#include <iostream>

#include "nhosc/cli.hpp"

int main(int argc, char** argv) { return nhosc::run_cli(argc, argv, std::cout, std::cerr); }
