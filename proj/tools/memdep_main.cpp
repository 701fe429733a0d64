#include <iostream>

#include "memdep/cli.hpp"

int main(int argc, char** argv) { return memdep::cli::run(argc, argv, std::cout, std::cerr); }
