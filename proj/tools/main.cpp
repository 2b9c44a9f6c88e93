#include <iostream>

#include "canform/cli.hpp"

int main(int argc, char **argv) { return canform::run_cli(argc, argv, std::cout, std::cerr); }
