#include <iostream>

#include "singmod/cli.hpp"

int main(int argc, char** argv) { return singmod::runCli(argc, argv, std::cout); }
