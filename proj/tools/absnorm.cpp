#include <iostream>

#include "absnorm/cli/commands.hpp"

int main(int argc, char** argv) { return absnorm::cli::run_cli(argc, argv, std::cout, std::cerr); }
