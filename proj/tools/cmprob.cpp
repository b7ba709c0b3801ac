#include <iostream>

#include "cmprob/cli.hpp"

int main(int argc, char** argv) { return cmprob::run(argc, argv, std::cout, std::cerr); }
