#include <iostream>

#include "vho/cli.hpp"

int main(int argc, char** argv) { return vho::cli::main_entry(argc, argv, std::cout, std::cerr); }
