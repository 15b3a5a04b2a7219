#include <iostream>

#include "schurpoly/cli.hpp"

int main(int argc, char** argv) {
    return schurpoly::cli::run(argc, argv, std::cout, std::cerr);
}
