#include <iostream>

#include "stabclass/cli.hpp"

int main(int argc, char** argv) { return stabclass::run_cli(argc, argv, std::cout, std::cerr); }
