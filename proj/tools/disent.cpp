#include "disent/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return disent::cli::run(argc, argv, std::cout, std::cerr); }
