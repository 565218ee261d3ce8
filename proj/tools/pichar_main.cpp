#include <iostream>

#include "pichar/cli.hpp"

int main(int argc, char** argv) {
    return pichar::run_cli(argc, argv, std::cout, std::cerr);
}
