#include <iostream>

#include "qbath/scenario/commands.hpp"

int main(int argc, char** argv) { return qbath::cli::run(argc, argv, std::cout, std::cerr); }
