#include <iostream>

#include "vcdim/cli.hpp"

int main(int argc, char** argv) { return vcdim::cli::run(argc, argv, std::cout, std::cerr); }
