#include <iostream>

#include "dqsym/cli.hpp"

int main(int argc, char** argv) { return dqsym::cli::run(argc, argv, std::cout, std::cerr); }
