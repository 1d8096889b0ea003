#include <iostream>

#include "ecd/cli.hpp"

int main(int argc, char** argv) {
    return ecd::cli::run_cli(argc, argv, std::cout, std::cerr);
}
