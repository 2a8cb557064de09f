#include <iostream>

#include "antdoes/cli.hpp"

int main(int argc, char** argv) { return antdoes::run_cli(argc, argv, std::cout, std::cerr); }
