#include <iostream>

#include "yangian_cli/cli.hpp"

int main(int argc, char** argv) { return yangian::cli::run(argc, argv, std::cout, std::cerr); }
