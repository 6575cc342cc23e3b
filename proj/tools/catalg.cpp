#include <iostream>

#include "catalg/cli.hpp"

int main(int argc, char** argv) { return catalg::run_cli(argc, argv, std::cout, std::cerr); }
