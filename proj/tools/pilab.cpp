#include <iostream>

#include "pilab/cli.hpp"

int main(int argc, char** argv) { return pilab::cli::dispatch(argc, argv, std::cout, std::cerr); }
