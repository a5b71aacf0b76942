#include "fekete/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fekete::cli::run(argc, argv, std::cout, std::cerr); }
