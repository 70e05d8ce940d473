#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return envctl::run(argc, argv, std::cout, std::cerr); }
