#include "ehrkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return ehrkit::run_cli(argc, argv, std::cout, std::cerr);
}
