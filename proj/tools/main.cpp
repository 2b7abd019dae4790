#include <iostream>

#include "lyubeznik/problem.hpp"

int main(int argc, char** argv) {
    return lyz::run_cli(argc, argv, std::cout, std::cerr);
}
