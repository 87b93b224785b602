#include <iostream>

#include "tgp/cli.hpp"

int main(int argc, char** argv) { return tgp::run_cli(argc, argv, std::cout, std::cerr); }
