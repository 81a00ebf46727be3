#include <iostream>

#include "charbound/cli.hpp"

int main(int argc, char** argv) { return charbound::cli::run(argc, argv, std::cout, std::cerr); }
