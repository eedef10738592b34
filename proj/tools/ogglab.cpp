#include <iostream>

#include "ogglab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ogglab::runCli(args, std::cout, std::cerr);
}
