#include <iostream>

#include "osculum/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return osculum::cli::run(args, std::cout, std::cerr);
}
