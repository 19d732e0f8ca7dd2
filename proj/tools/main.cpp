#include <iostream>

#include "hyperq/cli.hpp"

int main(int argc, char** argv) { return hyperq::run_cli(argc, argv, std::cout, std::cerr); }
