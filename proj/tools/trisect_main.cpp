#include <iostream>

#include "trisect/commands.hpp"

int main(int argc, char** argv) { return trisect::run_cli(argc, argv, std::cout, std::cerr); }
