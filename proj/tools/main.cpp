#include <iostream>

#include "z4poset_cli.hpp"

int main(int argc, char** argv) { return z4poset::cli::run(argc, argv, std::cout, std::cerr); }
