#include <iostream>

#include "qtorus/cli.hpp"

int main(int argc, char** argv) {
    return qtorus::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
