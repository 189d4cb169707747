#include <iostream>

#include "distembed/cli/app.hpp"

int main(int argc, char** argv) { return distembed::cli::run_cli(argc, argv, std::cout, std::cerr); }
