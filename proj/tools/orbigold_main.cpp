// Thin process entry point; all behaviour lives in orbigold::cli::run so the
// test suite can exercise the interface in-process.

#include "orbigold/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return orbigold::cli::run(args, std::cout, std::cerr);
}
