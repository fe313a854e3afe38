#include <iostream>
#include <string>
#include <vector>

#include "padorb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return padorb::cli::run(args, std::cout, std::cerr);
}
