#include <iostream>

#include "quiverinv/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return quiverinv::cli::run(args, std::cout, std::cerr);
}
