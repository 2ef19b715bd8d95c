#include <iostream>

#include "diffalg/cli.hpp"

int main(int argc, char** argv) {
    return diffalg::run_cli(argc, argv, std::cout, std::cerr);
}
