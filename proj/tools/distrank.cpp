#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return distrank::cli::run(argc, argv, std::cout, std::cerr); }
