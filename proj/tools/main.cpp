#include <iostream>

#include "convcode/cli.hpp"

int main(int argc, char** argv) {
    return convcode::run_cli(argc, argv, std::cout, std::cerr);
}
