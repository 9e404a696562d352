#include <iostream>

#include "dkp/cli.hpp"

int main(int argc, char** argv) { return dkp::cli::run(argc, argv, std::cout, std::cerr); }
