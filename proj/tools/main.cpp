#include <iostream>

#include "sdforge/cli.hpp"

int main(int argc, char** argv) {
    return sdforge::run_cli(argc, argv, std::cout, std::cerr);
}
