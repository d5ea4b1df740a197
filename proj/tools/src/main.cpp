#include <iostream>

#include "eulerop_cli/app.hpp"

int main(int argc, char** argv) { return eulerop::cli::run(argc, argv, std::cout, std::cerr); }
