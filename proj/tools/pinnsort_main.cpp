#include <iostream>
#include <string>
#include <vector>

#include "pinnsort/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pinnsort::cli::run(args, std::cout, std::cerr);
}
