#include <iostream>
#include <string>
#include <vector>

#include "fockcrystal/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fock::run_cli(args, std::cout, std::cerr);
}
