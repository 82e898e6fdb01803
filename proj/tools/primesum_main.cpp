#include <iostream>

#include "primesum/cli.hpp"

int main(int argc, char** argv) {
    return primesum::run_cli(argc, argv, std::cout, std::cerr);
}
