#include <iostream>

#include "reconkit/cli.hpp"

int main(int argc, char** argv) { return reconkit::run_cli(argc, argv, std::cout, std::cerr); }
