#include <iostream>

#include "isecode_cli.hpp"

int main(int argc, char** argv) { return isecode::cli::run_cli(argc, argv, std::cout, std::cerr); }
