#include <iostream>

#include "qjlab/cli.hpp"

int main(int argc, char** argv) { return qjlab::cli::run(argc, argv, std::cout, std::cerr); }
