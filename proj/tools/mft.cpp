#include <iostream>

#include "mft/cli.hpp"

int main(int argc, char** argv) { return mft::cli::run(argc, argv, std::cout, std::cerr); }
