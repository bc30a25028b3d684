#include "socarg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return socarg::cli_main(argc, argv, std::cout, std::cerr);
}
