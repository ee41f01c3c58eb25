#include <iostream>

#include "maxdeg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return maxdeg::run_cli(args, std::cout, std::cerr);
}
