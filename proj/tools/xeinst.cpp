#include "xe/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return xe::cli::run(argc, argv, std::cout, std::cerr); }
