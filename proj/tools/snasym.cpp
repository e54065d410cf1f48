#include <iostream>

#include "snasym/cli.hpp"

int main(int argc, char** argv) { return snasym::run_cli(argc, argv, std::cout, std::cerr); }
