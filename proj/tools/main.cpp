#include <iostream>
#include <string>
#include <vector>

#include "qbmg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qbmg::run_cli(args, std::cout, std::cerr);
}
