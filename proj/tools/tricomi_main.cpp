#include "tricomi/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tricomi::run_cli(argc, argv, std::cout, std::cerr); }
