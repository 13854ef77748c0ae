#include <iostream>

#include "cyclolab/cli.hpp"

int main(int argc, char** argv) { return cyclo::dispatch(argc, argv, std::cout, std::cerr); }
