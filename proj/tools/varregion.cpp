#include <iostream>

#include "varregion/cli.hpp"

int main(int argc, char** argv) {
    return varregion::cli::main_entry(argc, argv, std::cout, std::cerr);
}
