#include <iostream>

#include "camina/cli.hpp"

int main(int argc, char** argv) { return camina::cli::run(argc, argv, std::cout, std::cerr); }
