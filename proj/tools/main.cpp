#include <iostream>

#include "tristance/cli.hpp"

int main(int argc, char** argv) { return tristance::run_cli(argc, argv, std::cout, std::cerr); }
