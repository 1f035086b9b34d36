#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) { return entred::cli::main_cli(argc, argv, std::cout, std::cerr); }
