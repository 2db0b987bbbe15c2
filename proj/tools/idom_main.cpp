#include <iostream>
#include <string>
#include <vector>

#include "idom/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv, argv + argc);
    return idom::cli::run(args, std::cout, std::cerr);
}
