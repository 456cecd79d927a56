#include <iostream>

#include "ordermap/cli.hpp"

int main(int argc, char** argv) { return ordermap::cli::run(argc, argv, std::cout, std::cerr); }
